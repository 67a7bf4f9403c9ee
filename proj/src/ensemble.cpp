#include "hamarch/ensemble.hpp"

#include "hamarch/errors.hpp"

namespace hamarch {

int EnsembleSpec::line_length(int n) const {
  switch (id.tag) {
    case EnsembleTag::Z:
    case EnsembleTag::W:
    case EnsembleTag::V:
    case EnsembleTag::U:
      return 2 * n;
    case EnsembleTag::Y:
    case EnsembleTag::X:
      return 2 * n + 2;
  }
  throw Error("bad tag");
}

Color EnsembleSpec::line_color(int position) const {
  // Z/Y/X lines start black; the vacancy ensembles start white (their first
  // vertex hosts the fixed defect).
  bool starts_black = id.tag == EnsembleTag::Z || id.tag == EnsembleTag::Y ||
                      id.tag == EnsembleTag::X;
  bool even = position % 2 == 0;
  return (even == starts_black) ? Color::Black : Color::White;
}

int EnsembleSpec::arch_count(int n) const {
  switch (id.tag) {
    case EnsembleTag::Z: return n;
    case EnsembleTag::Y: return n + 2;
    case EnsembleTag::X: return n;
    case EnsembleTag::W: return n - 1;
    case EnsembleTag::V: return n - 2;
    case EnsembleTag::U: return n - 2;
  }
  throw Error("bad tag");
}

int EnsembleSpec::free_half_edges(int n) const {
  switch (id.tag) {
    case EnsembleTag::Y: return 2 * n + 4;  // trivalent segment endpoints carry two each
    case EnsembleTag::X: return 2 * n;      // univalent endpoints carry none
    default: return 2 * n;
  }
}

std::string EnsembleSpec::name() const {
  return tag_name(id.tag) + (id.colored ? "" : "-cubic");
}

EnsembleSpec spec_for(EnsembleId id) {
  EnsembleSpec s;
  s.id = id;
  switch (id.tag) {
    case EnsembleTag::Z:
      s.line_topology = LineTopology::InfiniteLine;
      s.min_n = 1;
      break;
    case EnsembleTag::Y:
      s.line_topology = LineTopology::Segment;
      s.winding = true;
      s.min_n = 0;
      break;
    case EnsembleTag::X:
      s.line_topology = LineTopology::Segment;
      s.winding = true;
      s.min_n = 0;
      break;
    case EnsembleTag::W:
      s.line_topology = LineTopology::InfiniteLine;
      s.symmetry_divisor = 2;
      s.min_n = 1;
      s.stubs = {{Color::Black, AnchorRule::FirstLineVertex},
                 {Color::White, AnchorRule::AnyHostVertex}};
      break;
    case EnsembleTag::V:
      s.line_topology = LineTopology::InfiniteLine;
      s.min_n = 2;
      s.pass_throughs = {{Color::White, AnchorRule::FirstLineVertex},
                         {Color::Black, AnchorRule::AnyHostVertex}};
      break;
    case EnsembleTag::U:
      s.line_topology = LineTopology::InfiniteLine;
      s.symmetry_divisor = 4;
      s.min_n = 2;
      s.pass_throughs = {{Color::White, AnchorRule::FirstLineVertex}};
      s.stubs = {{Color::White, AnchorRule::AnyHostVertex},
                 {Color::White, AnchorRule::AnyHostVertex}};
      break;
  }
  return s;
}

EnsembleTag tag_from_name(const std::string& name) {
  if (name.size() == 1) {
    switch (name[0]) {
      case 'z': return EnsembleTag::Z;
      case 'y': return EnsembleTag::Y;
      case 'x': return EnsembleTag::X;
      case 'w': return EnsembleTag::W;
      case 'v': return EnsembleTag::V;
      case 'u': return EnsembleTag::U;
    }
  }
  throw Error("unknown ensemble name: " + name);
}

std::string tag_name(EnsembleTag tag) {
  switch (tag) {
    case EnsembleTag::Z: return "z";
    case EnsembleTag::Y: return "y";
    case EnsembleTag::X: return "x";
    case EnsembleTag::W: return "w";
    case EnsembleTag::V: return "v";
    case EnsembleTag::U: return "u";
  }
  throw Error("bad tag");
}

}  // namespace hamarch
