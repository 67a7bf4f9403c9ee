#include "hamarch/countseq.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hamarch/errors.hpp"
#include "hamarch/sha256.hpp"

namespace hamarch {

using nlohmann::json;

std::string method_name(CountMethod m) {
  switch (m) {
    case CountMethod::Transfer: return "Transfer";
    case CountMethod::UpDown: return "UpDown";
    case CountMethod::ClosedForm: return "ClosedForm";
    case CountMethod::External: return "External";
  }
  throw Error("bad method");
}

CountMethod method_from_name(const std::string& name) {
  if (name == "Transfer") return CountMethod::Transfer;
  if (name == "UpDown") return CountMethod::UpDown;
  if (name == "ClosedForm") return CountMethod::ClosedForm;
  if (name == "External") return CountMethod::External;
  throw Error("unknown method: " + name);
}

const BigInt& CountSequence::at(int n) const {
  for (const auto& [i, v] : entries)
    if (i == n) return v;
  throw Error("count sequence has no entry for N=" + std::to_string(n));
}

void CountSequence::validate() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].second <= 0) throw Error("count sequence: nonpositive count");
    if (i > 0 && entries[i].first != entries[i - 1].first + 1)
      throw Error("count sequence: entries not contiguous");
  }
}

std::string to_json_string(const CountSequence& seq) {
  json j;
  j["format"] = 1;
  j["ensemble"] = tag_name(seq.ensemble.tag);
  j["colored"] = seq.ensemble.colored;
  j["method"] = method_name(seq.method);
  j["tool_version"] = seq.tool_version;
  if (seq.crosschecked) j["crosschecked"] = true;
  json entries = json::array();
  for (const auto& [n, count] : seq.entries)
    entries.push_back({{"N", n}, {"count", count.str()}});
  j["entries"] = std::move(entries);
  return j.dump(1) + "\n";
}

CountSequence count_sequence_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.value("format", 0) != 1) throw Error("count sequence: unsupported format");
  CountSequence seq;
  seq.ensemble.tag = tag_from_name(j.at("ensemble").get<std::string>());
  seq.ensemble.colored = j.at("colored").get<bool>();
  seq.method = method_from_name(j.at("method").get<std::string>());
  seq.tool_version = j.value("tool_version", "");
  seq.crosschecked = j.value("crosschecked", false);
  for (const auto& e : j.at("entries"))
    seq.entries.emplace_back(e.at("N").get<int>(), BigInt(e.at("count").get<std::string>()));
  seq.validate();
  return seq;
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

CountSequence load_count_sequence(const std::filesystem::path& path) {
  return count_sequence_from_json(slurp(path));
}

void save_count_sequence(const CountSequence& seq, const std::filesystem::path& path) {
  write_atomic(path, to_json_string(seq));
}

CountSequence load_golden(const std::filesystem::path& golden_dir, EnsembleTag tag) {
  return load_count_sequence(golden_dir / (tag_name(tag) + ".json"));
}

std::optional<std::string> verify_golden_checksums(const std::filesystem::path& golden_dir) {
  std::ifstream manifest(golden_dir / "SHA256SUMS");
  if (!manifest) return "SHA256SUMS (missing)";
  std::string digest, name;
  while (manifest >> digest >> name) {
    std::filesystem::path p = golden_dir / name;
    if (!std::filesystem::exists(p)) return name + " (missing)";
    if (sha256_hex(slurp(p)) != digest) return name;
  }
  return std::nullopt;
}

namespace {

std::string cache_checksum(EnsembleId id, CountMethod method, int n, const BigInt& count) {
  std::ostringstream ss;
  ss << tag_name(id.tag) << (id.colored ? "" : "-cubic") << ':' << method_name(method) << ':'
     << n << ':' << count.str();
  return sha256_hex(ss.str());
}

}  // namespace

std::filesystem::path CountCache::entry_path(EnsembleId id, CountMethod method, int n) const {
  std::string sub = tag_name(id.tag) + (id.colored ? "" : "-cubic");
  return dir_ / sub / (method_name(method) + "-" + std::to_string(n) + ".json");
}

std::optional<BigInt> CountCache::lookup(EnsembleId id, CountMethod method, int n) const {
  std::filesystem::path p = entry_path(id, method, n);
  if (!std::filesystem::exists(p)) return std::nullopt;
  try {
    json j = json::parse(slurp(p));
    BigInt count(j.at("count").get<std::string>());
    if (j.at("checksum").get<std::string>() != cache_checksum(id, method, n, count))
      return std::nullopt;  // corrupt entry: recompute
    return count;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void CountCache::store(EnsembleId id, CountMethod method, int n, const BigInt& count) const {
  json j;
  j["N"] = n;
  j["count"] = count.str();
  j["method"] = method_name(method);
  j["checksum"] = cache_checksum(id, method, n, count);
  write_atomic(entry_path(id, method, n), j.dump(1) + "\n");
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  };
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << field(header[i]);
  out << "\r\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << field(row[i]);
    out << "\r\n";
  }
  return out.str();
}

}  // namespace hamarch
