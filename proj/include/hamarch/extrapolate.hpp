#pragma once

#include <string>
#include <vector>

#include "hamarch/countseq.hpp"
#include "hamarch/real.hpp"

namespace hamarch {

/// Contiguously indexed sequence of high-precision reals.
struct RealSeq {
  int start_index = 0;
  std::vector<Real> values;
  unsigned precision_digits = 0;  // working precision the values carry

  int last_index() const { return start_index + int(values.size()) - 1; }
  const Real& back() const { return values.back(); }
};

/// Exact-rational twin used by the acceleration oracles.
struct RationalSeq {
  int start_index = 0;
  std::vector<BigRational> values;
};

enum class Quantity { GrowthRateSquared, Exponent };

/// Ratio observable a_N = t_{N+1} / t_N (converges to mu^2).
RealSeq ratio_seq(const CountSequence& t);

/// Log-curvature observable b_N = N^2 Log(t_{N+2} t_N / t_{N+1}^2)
/// (converges to the configuration exponent).
RealSeq logcurv_seq(const CountSequence& t);

/// Iterated-difference acceleration of order k: (1/k!) Delta^k (N^k s_N).
/// Annihilates 1/N-polynomial tails of degree <= k.
RealSeq richardson(const RealSeq& s, int k);
RationalSeq richardson_exact(const RationalSeq& s, int k);

/// The modified Aitken-Delta^2 transform iterated k times:
///   s'_N = s_N - ((k+1)/k) (Ds)_N (Ds)_{N-1} / (D2 s)_{N-1}.
/// Indices whose second difference vanishes (with nonvanishing numerator)
/// are dropped and reported; the returned sequence is the longest contiguous
/// tail that survives every level.
struct AitkenResult {
  RealSeq seq;
  std::vector<int> dropped;
};
AitkenResult aitken(const RealSeq& s, int k);

struct AitkenExactResult {
  RationalSeq seq;
  std::vector<int> dropped;
};
AitkenExactResult aitken_exact(const RationalSeq& s, int k);

struct EstimateDiagnostics {
  struct Family {
    int k = 0;
    RealSeq seq;
  };
  std::vector<Family> richardson;  // k = 1..k_max
  std::vector<Family> aitken;      // k = 1..min(3, k_max)
  std::vector<Real> candidates;    // deep-tail values the headline is judged by
  std::vector<int> aitken_dropped;
  std::string rule;
};

struct Estimate {
  Real value;
  Real uncertainty;  // spread of the deep-tail candidates; always > 0
  int stable_digits = 0;
  EstimateDiagnostics diagnostics;

  std::string to_json_string() const;
  std::vector<std::vector<std::string>> diagnostics_csv_rows() const;
};

/// Accelerated limit estimate for mu^2 or the configuration exponent.
/// Headline value: last element of the deepest usable Richardson sequence;
/// stable digits and uncertainty come from the deep tails of both families.
Estimate estimate(const CountSequence& t, Quantity quantity, int k_max = 7);

}  // namespace hamarch
