#pragma once

#include <kirby/types.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace kirby {

// One PD crossing: four arc labels listed counterclockwise starting at the
// incoming under-strand arc. Slot geometry (under-in at the bottom):
//   slot 0 = S (under in), slot 1 = E, slot 2 = N (under out), slot 3 = W.
struct Crossing {
  std::array<int, 4> arcs;
};

// A validated oriented link diagram. Arc labels are 1..2*crossings and run
// consecutively along each component; components are recovered from the
// strand successor relation at parse time. Components may also be
// zero-crossing unknots (declared explicitly, they carry no arcs).
class OrientedLinkDiagram {
 public:
  OrientedLinkDiagram() = default;  // empty diagram, no components

  // `declared_components` adds zero-crossing unknots beyond the components
  // carried by the crossings (PD text cannot encode them).
  static OrientedLinkDiagram from_crossings(std::vector<Crossing> crossings,
                                            int declared_components = -1);

  int crossing_count() const { return int(crossings_.size()); }
  int arc_count() const { return 2 * crossing_count(); }
  int component_count() const { return int(components_.size()); }
  const std::vector<Crossing>& crossings() const { return crossings_; }

  // arcs of component i in traversal order of the natural orientation
  const std::vector<int>& component_arcs(int i) const;
  int component_of_arc(int arc) const;
  bool orientation(int component) const { return orientations_[size_t(component)]; }

  // per-crossing data (resolved at construction)
  int over_in_slot(int crossing) const;           // 1 or 3
  int under_component(int crossing) const;
  int over_component(int crossing) const;
  int crossing_sign(int crossing) const;          // respects orientations
  int writhe() const;

  OrientedLinkDiagram reversed(int component) const;

 private:
  void resolve();

  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> components_;
  std::vector<bool> orientations_;
  std::vector<int> over_in_;        // per crossing: 1 or 3
  std::vector<int> comp_of_arc_;    // arc label -> component index
};

struct FramedLink {
  OrientedLinkDiagram diagram;
  std::vector<Int> framings;  // one per component
};

// Parses comma-separated `X(a,b,c,d)` tuples. Empty text with a declared
// component count yields unlinked zero-crossing unknots.
OrientedLinkDiagram parse_pd_diagram(const std::string& text,
                                     int declared_components = -1);
FramedLink parse_pd(const std::string& text,
                    std::optional<std::vector<Int>> framings = std::nullopt,
                    int declared_components = -1);

struct SignData {
  std::vector<int> signs;
  Int writhe = 0;
};
SignData crossing_signs(const OrientedLinkDiagram& d);

Int linking_number(const OrientedLinkDiagram& d, int i, int j);
IntMat linking_matrix(const FramedLink& fl);

OrientedLinkDiagram reverse_component(const OrientedLinkDiagram& d, int i);

// Connected sum of two knot diagrams, spliced at the given arcs. Either
// summand may be a zero-crossing unknot, in which case its arc argument is
// ignored.
OrientedLinkDiagram connected_sum(const OrientedLinkDiagram& d1,
                                  const OrientedLinkDiagram& d2,
                                  int arc1 = 1, int arc2 = 1);

}  // namespace kirby
