#include <doctest.h>

#include <random>

#include "hamarch/transfer.hpp"
#include "hamarch/errors.hpp"

using namespace hamarch;

namespace {

StateVector single(std::uint32_t nu, std::uint32_t nd) {
  StateVector v;
  v[ArchState{nu, nd}] = 1;
  return v;
}

BigInt weight(const StateVector& v, std::uint32_t nu, std::uint32_t nd) {
  auto it = v.find(ArchState{nu, nd});
  return it == v.end() ? BigInt(0) : it->second;
}

// Explicit-stack replay of a Z half line: every action sequence is walked
// with vectors of colors, mirroring nothing of the packed engine.
void replay(std::vector<Color>& up, std::vector<Color>& down, int step, int n,
            std::vector<std::pair<ArchState, int>>& leaves) {
  if (step > n) {
    leaves.emplace_back(encode_state(up, down), 1);
    return;
  }
  Color c = step % 2 ? Color::Black : Color::White;
  auto push = [&](std::vector<Color>& stack) {
    stack.insert(stack.begin(), c);
    replay(up, down, step + 1, n, leaves);
    stack.erase(stack.begin());
  };
  push(up);
  push(down);
  if (!up.empty() && up.front() == opposite(c)) {
    Color saved = up.front();
    up.erase(up.begin());
    replay(up, down, step + 1, n, leaves);
    up.insert(up.begin(), saved);
  }
  if (!down.empty() && down.front() == opposite(c)) {
    Color saved = down.front();
    down.erase(down.begin());
    replay(up, down, step + 1, n, leaves);
    down.insert(down.begin(), saved);
  }
}

}  // namespace

TEST_CASE("state encoding") {
  CHECK(encode_state({}, {}) == ArchState{1, 1});
  CHECK(encode_state({Color::Black}, {}) == ArchState{3, 1});
  CHECK(encode_state({Color::White, Color::Black}, {}) == ArchState{6, 1});
}

TEST_CASE("encode/decode round-trips for stacks up to depth 30") {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<Color> up(rng() % 31), down(rng() % 31);
    for (auto& c : up) c = rng() & 1 ? Color::Black : Color::White;
    for (auto& c : down) c = rng() & 1 ? Color::Black : Color::White;
    ArchState s = encode_state(up, down);
    std::vector<Color> up2, down2;
    decode_state(s, up2, down2);
    CHECK(up2 == up);
    CHECK(down2 == down);
  }
  std::vector<Color> deep(32, Color::Black);
  CHECK_THROWS_AS(encode_state(deep, {}), Error);
}

TEST_CASE("elementary step from the empty state") {
  StateVector out = step(single(1, 1), Color::Black);
  CHECK(out.size() == 2);
  CHECK(weight(out, 3, 1) == 1);
  CHECK(weight(out, 1, 3) == 1);
}

TEST_CASE("elementary step with a closable arch") {
  StateVector out = step(single(3, 1), Color::White);
  CHECK(out.size() == 3);
  CHECK(weight(out, 6, 1) == 1);
  CHECK(weight(out, 3, 2) == 1);
  CHECK(weight(out, 1, 1) == 1);
}

TEST_CASE("each state emits between two and four successors") {
  std::mt19937 rng(17);
  for (int t = 0; t < 50; ++t) {
    std::vector<Color> up(rng() % 5), down(rng() % 5);
    for (auto& c : up) c = rng() & 1 ? Color::Black : Color::White;
    for (auto& c : down) c = rng() & 1 ? Color::Black : Color::White;
    StateVector v;
    v[encode_state(up, down)] = 1;
    for (Color c : {Color::Black, Color::White}) {
      BigInt mass = 0;
      for (const auto& [s, w] : step(v, c)) mass += w;
      CHECK(mass >= 2);
      CHECK(mass <= 4);
    }
  }
}

TEST_CASE("close_segment pairs stacks elementwise across the winding region") {
  CHECK(close_segment(ArchState{1, 1}) == 1);
  CHECK(close_segment(encode_state({Color::Black}, {Color::White})) == 1);
  CHECK(close_segment(encode_state({Color::Black, Color::Black}, {})) == 0);
  CHECK(close_segment(encode_state({Color::Black}, {Color::Black})) == 0);
  CHECK(close_segment(encode_state({Color::Black, Color::White},
                                   {Color::White, Color::Black})) == 1);
}

TEST_CASE("replayed action tree matches the packed evolution") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Color> up, down;
    std::vector<std::pair<ArchState, int>> leaves;
    replay(up, down, 1, n, leaves);
    StateVector expect;
    for (auto& [s, w] : leaves) expect[s] += w;

    StateVector got = single(1, 1);
    for (int k = 1; k <= n; ++k) got = step(got, k % 2 ? Color::Black : Color::White);
    CHECK(got.size() == expect.size());
    for (const auto& [s, w] : expect) CHECK(weight(got, s.n_u, s.n_d) == w);
  }
}

TEST_CASE("transfer matrix reproduces the published counts") {
  EnsembleSpec z = spec_for({EnsembleTag::Z, true});
  CHECK(tm_enumerate(z, 2) == 8);
  CHECK(tm_enumerate(z, 5) == 1424);
  CHECK(tm_enumerate(spec_for({EnsembleTag::Y, true}), 4) == 2152);
  CHECK(tm_enumerate(spec_for({EnsembleTag::X, true}), 3) == 168);
  CHECK(tm_enumerate(spec_for({EnsembleTag::W, true}), 6) == 7160);
}

TEST_CASE("prefix runs agree with single sizes") {
  std::vector<BigInt> zs = tm_z_prefix(8);
  CHECK(zs.size() == 8);
  CHECK(zs[0] == 2);
  CHECK(zs[7] == 492292);
  std::vector<BigInt> ys = tm_y_prefix(3);
  CHECK(ys == std::vector<BigInt>{1, 6, 40, 286});
  std::vector<BigInt> xs = tm_x_prefix(3);
  CHECK(xs == std::vector<BigInt>{1, 4, 24, 168});
}

TEST_CASE("unsupported requests are refused") {
  CHECK_THROWS_AS(tm_enumerate(spec_for({EnsembleTag::V, true}), 4), Unsupported);
  CHECK_THROWS_AS(tm_enumerate(spec_for({EnsembleTag::U, true}), 4), Unsupported);
  CHECK_THROWS_AS(tm_enumerate(spec_for({EnsembleTag::Z, false}), 4), Unsupported);
  CHECK_THROWS_AS(tm_enumerate(spec_for({EnsembleTag::Z, true}), 0), Error);
  CHECK_THROWS_AS(tm_enumerate(spec_for({EnsembleTag::Z, true}), 80), Error);
}

TEST_CASE("state budget bound aborts instead of thrashing") {
  TmOptions opts;
  opts.max_states = 10;
  CHECK_THROWS_AS(tm_enumerate(spec_for({EnsembleTag::Z, true}), 12, opts), Error);
}
