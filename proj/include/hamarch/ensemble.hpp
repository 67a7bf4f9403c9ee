#pragma once

#include <string>
#include <vector>

#include "hamarch/arch.hpp"

namespace hamarch {

enum class EnsembleTag : std::uint8_t { Z, Y, X, W, V, U };

struct EnsembleId {
  EnsembleTag tag = EnsembleTag::Z;
  bool colored = true;  // true = bicubic (bicolored), false = cubic

  bool operator==(const EnsembleId&) const = default;
};

enum class LineTopology : std::uint8_t { InfiniteLine, Segment };

enum class AnchorRule : std::uint8_t {
  FirstLineVertex,  // fixed to the first vertex of the line, drawn above
  AnyHostVertex,    // any line vertex of the opposite color (any vertex, cubic)
};

/// Unvisited univalent defect consuming its host's free half-edge.
struct StubSpec {
  Color color;
  AnchorRule anchor;
};

/// Unvisited bivalent defect realized as a same-color arch through a
/// degree-2 vertex; both endpoints carry `color`.
struct PassThroughSpec {
  Color color;
  AnchorRule anchor;
};

/// Declarative description of one counted configuration family.
struct EnsembleSpec {
  EnsembleId id;
  LineTopology line_topology = LineTopology::InfiniteLine;
  bool winding = false;  // arches may pass right of the segment's right end
  int symmetry_divisor = 1;
  int min_n = 0;
  std::vector<StubSpec> stubs;
  std::vector<PassThroughSpec> pass_throughs;

  /// Total number of vertices drawn on the line (including the univalent
  /// segment endpoints of X, which carry no free half-edge).
  int line_length(int n) const;

  /// Color of the 0-based line position.
  Color line_color(int position) const;

  /// Number of ordinary (bicolored) arches at size N.
  int arch_count(int n) const;

  /// Free half-edges of the line vertices available to arches, stubs and
  /// pass-throughs.
  int free_half_edges(int n) const;

  std::string name() const;  // "z".."u", with "-cubic" suffix when uncolored
};

EnsembleSpec spec_for(EnsembleId id);

/// Parses the single-letter ensemble names used by the CLI and file formats.
EnsembleTag tag_from_name(const std::string& name);
std::string tag_name(EnsembleTag tag);

inline const EnsembleTag kAllTags[] = {EnsembleTag::Z, EnsembleTag::Y, EnsembleTag::X,
                                       EnsembleTag::W, EnsembleTag::V, EnsembleTag::U};

}  // namespace hamarch
