#include <doctest.h>

#include "hamarch/ensemble.hpp"
#include "hamarch/errors.hpp"
#include "hamarch/updown.hpp"

using namespace hamarch;

TEST_CASE("spec_for populates the six bicubic families") {
  EnsembleSpec z = spec_for({EnsembleTag::Z, true});
  CHECK(z.line_topology == LineTopology::InfiniteLine);
  CHECK(z.line_length(5) == 10);
  CHECK(z.arch_count(5) == 5);
  CHECK(z.symmetry_divisor == 1);
  CHECK(!z.winding);
  CHECK(z.line_color(0) == Color::Black);
  CHECK(z.line_color(1) == Color::White);

  EnsembleSpec y = spec_for({EnsembleTag::Y, true});
  CHECK(y.line_topology == LineTopology::Segment);
  CHECK(y.line_length(4) == 10);
  CHECK(y.arch_count(4) == 6);
  CHECK(y.winding);
  CHECK(y.symmetry_divisor == 1);

  EnsembleSpec x = spec_for({EnsembleTag::X, true});
  CHECK(x.line_topology == LineTopology::Segment);
  CHECK(x.arch_count(4) == 4);
  CHECK(x.winding);

  EnsembleSpec w = spec_for({EnsembleTag::W, true});
  CHECK(w.symmetry_divisor == 2);
  CHECK(w.stubs.size() == 2);
  CHECK(w.stubs[0].color == Color::Black);
  CHECK(w.stubs[0].anchor == AnchorRule::FirstLineVertex);
  CHECK(w.line_color(0) == Color::White);
  CHECK(w.arch_count(6) == 5);

  EnsembleSpec v = spec_for({EnsembleTag::V, true});
  CHECK(v.symmetry_divisor == 1);
  CHECK(v.pass_throughs.size() == 2);
  CHECK(v.pass_throughs[0].color == Color::White);
  CHECK(v.pass_throughs[0].anchor == AnchorRule::FirstLineVertex);
  CHECK(v.arch_count(6) == 4);

  EnsembleSpec u = spec_for({EnsembleTag::U, true});
  CHECK(u.symmetry_divisor == 4);
  CHECK(u.pass_throughs.size() == 1);
  CHECK(u.stubs.size() == 2);
  CHECK(u.arch_count(6) == 4);
  CHECK(u.min_n == 2);
}

TEST_CASE("half-edge budget balances for every family and size") {
  for (EnsembleTag tag : kAllTags) {
    for (bool colored : {true, false}) {
      EnsembleSpec s = spec_for({tag, colored});
      for (int n = s.min_n; n <= 10; ++n) {
        int used = 2 * s.arch_count(n) + int(s.stubs.size()) + 2 * int(s.pass_throughs.size());
        CHECK(used == s.free_half_edges(n));
      }
    }
  }
}

TEST_CASE("counts are nonzero exactly from the minimal size") {
  for (EnsembleTag tag : kAllTags) {
    EnsembleSpec s = spec_for({tag, true});
    CHECK(ud_enumerate(s, s.min_n) > 0);
    if (s.min_n > 0) CHECK_THROWS_AS(ud_enumerate(s, s.min_n - 1), Error);
  }
}

TEST_CASE("ensemble names round-trip") {
  for (EnsembleTag tag : kAllTags) CHECK(tag_from_name(tag_name(tag)) == tag);
  CHECK_THROWS_AS(tag_from_name("q"), Error);
  CHECK(spec_for({EnsembleTag::V, false}).name() == "v-cubic");
}
