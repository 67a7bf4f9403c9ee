#include <doctest.h>

#include "hamarch/cubic.hpp"
#include "hamarch/extrapolate.hpp"
#include "hamarch/errors.hpp"

using namespace hamarch;

namespace {

CountSequence closed_form_sequence(EnsembleTag tag, int n_max) {
  EnsembleSpec spec = spec_for({tag, false});
  CountSequence seq;
  seq.ensemble = spec.id;
  seq.method = CountMethod::ClosedForm;
  seq.tool_version = "test";
  for (int n = std::max(spec.min_n, 1); n <= n_max; ++n)
    seq.entries.emplace_back(n, cubic_closed_form(spec.id, n));
  return seq;
}

}  // namespace

TEST_CASE("closed forms at fixed sizes") {
  CHECK(cubic_closed_form({EnsembleTag::Z, false}, 1) == 2);
  CHECK(cubic_closed_form({EnsembleTag::Z, false}, 3) == 70);
  CHECK(cubic_closed_form({EnsembleTag::Z, false}, 4) == 588);
  CHECK(cubic_closed_form({EnsembleTag::X, false}, 2) == 32);
  CHECK(cubic_closed_form({EnsembleTag::V, false}, 2) == 5);
  CHECK(cubic_closed_form({EnsembleTag::W, false}, 1) == 1);
  CHECK(cubic_closed_form({EnsembleTag::V, false}, 1) == 0);  // vanishing prefactor
  CHECK_THROWS_AS(cubic_closed_form({EnsembleTag::W, false}, 0), Error);
}

TEST_CASE("engine equals closed forms") {
  for (EnsembleTag tag : kAllTags) {
    EnsembleSpec spec = spec_for({tag, false});
    for (int n = spec.min_n; n <= 8; ++n) {
      CAPTURE(spec.name());
      CAPTURE(n);
      CHECK(cubic_enumerate(spec, n) == cubic_closed_form(spec.id, n));
    }
  }
}

TEST_CASE("binomial sum identity") {
  for (int n = 0; n <= 20; ++n)
    CHECK(cubic_binomial_sum(n) == cubic_closed_form({EnsembleTag::Z, false}, n));
}

TEST_CASE("growth ratio approaches 16") {
  auto ratio_at = [](int n) {
    return Real(cubic_closed_form({EnsembleTag::Z, false}, n + 1)) /
           Real(cubic_closed_form({EnsembleTag::Z, false}, n));
  };
  // the correction is -3/N + O(1/N^2): about 1.5% at N=200, under 1% at N=300
  CHECK(abs(ratio_at(200) - 16) / 16 < Real("0.015"));
  CHECK(abs(ratio_at(300) - 16) / 16 < Real("0.01"));
  CHECK(abs(ratio_at(300) - 16) > abs(ratio_at(600) - 16));
}

TEST_CASE("extrapolated growth rate hits 16 to 1e-6 from 100 terms") {
  set_real_precision(64);
  Estimate est = estimate(closed_form_sequence(EnsembleTag::Z, 100),
                          Quantity::GrowthRateSquared, 7);
  CHECK(abs(est.value - 16) < Real("1e-6"));
}

TEST_CASE("extrapolated exponents reproduce the six closed-form values") {
  set_real_precision(64);
  struct Target {
    EnsembleTag tag;
    double beta;
  };
  // moderate depth here; the acceptance suite runs the full N <= 400 pass
  for (Target t : {Target{EnsembleTag::Z, 3.0}, Target{EnsembleTag::Y, 1.5},
                   Target{EnsembleTag::U, 1.0}}) {
    Estimate est = estimate(closed_form_sequence(t.tag, 150), Quantity::Exponent, 7);
    CHECK(abs(est.value - Real(t.beta)) < Real("0.02"));
  }
}

TEST_CASE("cubic_enumerate rejects colored specs") {
  CHECK_THROWS_AS(cubic_enumerate(spec_for({EnsembleTag::Z, true}), 3), Error);
}
