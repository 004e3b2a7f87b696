#pragma once

#include <kirby/forms.hpp>
#include <kirby/linkdiag.hpp>
#include <kirby/types.hpp>

#include <optional>
#include <string>
#include <vector>

namespace kirby {

// One event of a front word, read left to right. Stack positions are
// 1-based, bottom to top. LeftCusp(i) inserts two strands at i, i+1;
// RightCusp(i) joins strands i, i+1; Crossing(i) transposes them, the
// strand descending from i+1 passing over (fronts force the over-strand
// to have the more negative slope).
struct FrontEvent {
  enum class Type { left_cusp, right_cusp, crossing } type;
  int position;
};

using FrontWord = std::vector<FrontEvent>;

FrontEvent left_cusp(int i);
FrontEvent right_cusp(int i);
FrontEvent crossing(int i);

struct ClassicalInvariants {
  Int tb = 0;
  Int rot = 0;
  Int writhe = 0;
  int cusps = 0;
  int up_cusps = 0;
  int down_cusps = 0;
};

// A validated front with per-component orientations. The canonical
// orientation of a component traverses the lower arc of its earliest left
// cusp rightward; the stored flag is true for canonical.
class OrientedFront {
 public:
  // validates the word; all orientations canonical
  explicit OrientedFront(FrontWord word);
  OrientedFront(FrontWord word, std::vector<bool> orientations);

  const FrontWord& word() const { return word_; }
  int component_count() const { return int(component_arc_count_.size()); }
  int crossing_count() const { return int(crossings_.size()); }
  int cusp_count() const { return int(cusps_.size()); }
  bool orientation(int component) const;

  OrientedFront reversed(int component) const;

  ClassicalInvariants invariants() const;               // whole front
  ClassicalInvariants component_invariants(int c) const;

  // Inserts a zig-zag on the chosen component: tb drops by 1 and rot
  // changes by exactly `sign`.
  OrientedFront stabilized(int component, int sign) const;

  // Smooths the cusps into a PD diagram; crossings, orientations, writhe
  // and component count carry over. `component_map`, when supplied, gets
  // the PD component index of each front component.
  OrientedLinkDiagram to_pd(std::vector<int>* component_map = nullptr) const;

 private:
  struct Cusp {
    bool left = true;
    int event = 0;
    int lower = 0, upper = 0;  // arc ids
  };
  struct Cross {
    int event = 0;
    int lower_in = 0, upper_in = 0, lower_out = 0, upper_out = 0;
  };

  void build();
  int arc_component(int arc) const { return arc_comp_[size_t(arc)]; }
  bool arc_dir_right(int arc) const;  // actual direction, flag applied
  int cross_sign(const Cross& x) const;
  bool cusp_down(const Cusp& c) const;

  FrontWord word_;
  std::vector<bool> orientations_;

  std::vector<Cusp> cusps_;
  std::vector<Cross> crossings_;
  int arc_count_ = 0;
  std::vector<int> arc_comp_;
  std::vector<bool> arc_canonical_right_;
  std::vector<int> component_anchor_;     // earliest left-cusp event index
  std::vector<int> component_arc_count_;
};

OrientedFront validate_front(const FrontWord& w);
ClassicalInvariants classical_invariants(const OrientedFront& f);
OrientedFront stabilize(const OrientedFront& f, int component, int sign);
OrientedLinkDiagram front_to_pd(const OrientedFront& f);

struct SteinTrace {
  SymmetricForm form;      // tb - 1 framings on the diagonal
  std::vector<Int> c1;     // rotation numbers
};

// Each front contributes one 2-handle and must be a single component.
// Pairwise linking numbers are taken from `linking` when given, otherwise
// computed from the smoothed PD of the split union.
SteinTrace stein_trace(const std::vector<OrientedFront>& fronts,
                       std::optional<IntMat> linking = std::nullopt);

struct GenusBound {
  std::string kind;  // "slice-bennequin" | "adjunction" | "thom"
  Int bound = 0;
  Int tb = 0, rot = 0;      // slice-bennequin inputs
  Int square = 0, pairing = 0;  // adjunction inputs
  Int degree = 0;           // thom input
};

GenusBound slice_bennequin_bound(const OrientedFront& f);
GenusBound adjunction_bound(const SteinTrace& trace, const IntVec& cls);
GenusBound thom_bound(Int degree);

}  // namespace kirby
