#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamarch/bigint.hpp"
#include "hamarch/ensemble.hpp"

namespace hamarch {

enum class CountMethod : std::uint8_t { Transfer, UpDown, ClosedForm, External };

std::string method_name(CountMethod m);
CountMethod method_from_name(const std::string& name);

/// One enumerated integer sequence with provenance. Counts serialize as
/// decimal strings; the file format carries "format": 1.
struct CountSequence {
  EnsembleId ensemble;
  std::vector<std::pair<int, BigInt>> entries;  // (N, count), sorted contiguous
  CountMethod method = CountMethod::UpDown;
  std::string tool_version;
  bool crosschecked = false;  // method=both attestation

  int first_n() const { return entries.empty() ? 0 : entries.front().first; }
  int last_n() const { return entries.empty() ? -1 : entries.back().first; }
  const BigInt& at(int n) const;

  /// Throws unless entries are sorted, contiguous and positive.
  void validate() const;
};

std::string to_json_string(const CountSequence& seq);
CountSequence count_sequence_from_json(const std::string& json_text);

CountSequence load_count_sequence(const std::filesystem::path& path);

/// Writes atomically (temp file + rename).
void save_count_sequence(const CountSequence& seq, const std::filesystem::path& path);

/// Bundled table of published counts for one ensemble (method = External).
CountSequence load_golden(const std::filesystem::path& golden_dir, EnsembleTag tag);

/// Verifies data files against the SHA256SUMS manifest; returns the failing
/// file name, or nullopt when everything matches.
std::optional<std::string> verify_golden_checksums(const std::filesystem::path& golden_dir);

/// Per-(ensemble, N) result cache with checksummed entries. Corrupt entries
/// read as missing so callers recompute.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::optional<BigInt> lookup(EnsembleId id, CountMethod method, int n) const;
  void store(EnsembleId id, CountMethod method, int n, const BigInt& count) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path entry_path(EnsembleId id, CountMethod method, int n) const;
  std::filesystem::path dir_;
};

/// RFC-4180-style CSV writer: header row, '.' decimal separator.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

}  // namespace hamarch
