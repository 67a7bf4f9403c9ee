#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hamarch/bigint.hpp"
#include "hamarch/ensemble.hpp"

namespace hamarch {

/// Pair of encoded open-arch stacks. A stack of p colors a_1..a_p (innermost,
/// line-adjacent arch first) encodes to 2^p + sum a_i 2^(i-1); empty = 1.
struct ArchState {
  std::uint32_t n_u = 1;
  std::uint32_t n_d = 1;

  bool operator==(const ArchState&) const = default;
  std::uint64_t packed() const { return (std::uint64_t(n_u) << 32) | n_d; }
};

struct ArchStateHash {
  std::size_t operator()(const ArchState& s) const {
    return std::size_t(s.packed() * 0x9e3779b97f4a7c15ull);
  }
};

/// Innermost-first color stacks -> encoded state. Throws when a stack exceeds
/// the 31-arch encoding width.
ArchState encode_state(const std::vector<Color>& upper, const std::vector<Color>& lower);
void decode_state(ArchState s, std::vector<Color>& upper, std::vector<Color>& lower);

/// Sparse amplitude vector over reachable states.
using StateVector = std::unordered_map<ArchState, BigInt, ArchStateHash>;

/// One vertex of color `vertex_color`: each state branches into the four
/// moves (open above/below with the vertex color; close the innermost open
/// arch of opposite color above/below). Weights add over colliding states.
StateVector step(const StateVector& v, Color vertex_color);

/// Completion count for an end-of-segment state: residual open arches must
/// pair across the region right of the segment. A pairing that stays on one
/// side of the line is isotopic to an in-line closure and already counted, so
/// only upper-lower (winding) pairs remain; noncrossing then forces the
/// unique rainbow pairing, giving 1 iff the stacks are elementwise
/// opposite-colored at equal depth.
BigInt close_segment(const ArchState& s);

struct TmOptions {
  /// Abort if the state vector would exceed this many entries (0 = no bound).
  std::size_t max_states = 0;
};

/// Exact transfer-matrix count for Z, Y, X, W (colored specs only; V and U
/// are served by the up-down engine).
BigInt tm_enumerate(const EnsembleSpec& spec, int n, const TmOptions& opts = {});

/// All of z_1..z_{n_max} from a single forward evolution (the backward half
/// of the bracket equals the forward half, so z_N is the sum of squared
/// amplitudes after N vertices).
std::vector<BigInt> tm_z_prefix(int n_max, const TmOptions& opts = {});

/// y_0..y_{n_max} (resp. x_0..x_{n_max}) sharing one forward evolution.
std::vector<BigInt> tm_y_prefix(int n_max, const TmOptions& opts = {});
std::vector<BigInt> tm_x_prefix(int n_max, const TmOptions& opts = {});

}  // namespace hamarch
