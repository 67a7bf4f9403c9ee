#pragma once

#include "hamarch/bigint.hpp"
#include "hamarch/ensemble.hpp"
#include "hamarch/updown.hpp"

namespace hamarch {

/// Uncolored (cubic) enumeration: the up-down engine with the bicoloring
/// constraint dropped.
BigInt cubic_enumerate(const EnsembleSpec& spec, int n, const UdOptions& opts = {});

/// Closed forms for the six cubic families:
///   z = Cat_N Cat_{N+1}        y = 4^N Cat_{N+2}       x = 4^N Cat_N
///   w = (2N-1) Cat_{N-1} Cat_N v = (N-1) Cat_N Cat_{N+1} / 2
///   u = (2N-1)(2N-2) Cat_{N-1} Cat_N / 4
BigInt cubic_closed_form(EnsembleId id, int n);

/// sum_k binom(2N, 2k) Cat_k Cat_{N-k}; equals cubic_closed_form(Z, N).
BigInt cubic_binomial_sum(int n);

}  // namespace hamarch
