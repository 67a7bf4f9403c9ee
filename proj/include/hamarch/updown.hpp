#pragma once

#include <functional>
#include <vector>

#include "hamarch/bigint.hpp"
#include "hamarch/ensemble.hpp"

namespace hamarch {

/// Split of the line positions 1..L into up and down subsequences.
struct Partition {
  std::vector<int> up_set;    // sorted ascending
  std::vector<int> down_set;  // complement, sorted ascending
};

/// Streams the admissible partitions of 1..L (up_set holding equally many
/// odd and even indices). Return false from the callback to stop early.
void for_each_admissible_partition(int l, const std::function<bool(const Partition&)>& fn);

std::vector<Partition> admissible_partitions(int l);

struct UdOptions {
  int threads = 0;  // 0 = hardware concurrency
  std::size_t memo_capacity = std::size_t(1) << 22;
};

/// Up-down factorization count for any of the six ensembles, colored or
/// cubic. Exact; the symmetry divisor is applied with a divisibility check.
BigInt ud_enumerate(const EnsembleSpec& spec, int n, const UdOptions& opts = {});

}  // namespace hamarch
