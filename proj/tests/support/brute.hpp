#pragma once

#include "hamarch/bigint.hpp"
#include "hamarch/ensemble.hpp"

namespace hamarch::testing {

/// Independent oracle: explicitly generates every arch diagram (defect
/// placements, up/down assignments, chord matchings with pairwise geometric
/// crossing checks) and counts the valid ones. No memoization, no shared
/// logic with the production counters. Feasible for small N only.
BigInt brute_enumerate(const EnsembleSpec& spec, int n);

}  // namespace hamarch::testing
