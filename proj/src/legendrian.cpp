#include <kirby/legendrian.hpp>

#include <algorithm>
#include <map>

namespace kirby {

FrontEvent left_cusp(int i) { return {FrontEvent::Type::left_cusp, i}; }
FrontEvent right_cusp(int i) { return {FrontEvent::Type::right_cusp, i}; }
FrontEvent crossing(int i) { return {FrontEvent::Type::crossing, i}; }

OrientedFront::OrientedFront(FrontWord word) : word_(std::move(word)) {
  build();
  orientations_.assign(size_t(component_count()), true);
}

OrientedFront::OrientedFront(FrontWord word, std::vector<bool> orientations)
    : word_(std::move(word)) {
  build();
  if (int(orientations.size()) != component_count())
    throw input_error("orientation count does not match component count");
  orientations_ = std::move(orientations);
}

bool OrientedFront::orientation(int component) const {
  if (component < 0 || component >= component_count())
    throw input_error("component index out of range");
  return orientations_[size_t(component)];
}

OrientedFront OrientedFront::reversed(int component) const {
  if (component < 0 || component >= component_count())
    throw input_error("component index out of range");
  OrientedFront f = *this;
  f.orientations_[size_t(component)] = !f.orientations_[size_t(component)];
  return f;
}

void OrientedFront::build() {
  cusps_.clear();
  crossings_.clear();
  arc_count_ = 0;

  // Simulate the strand stack. stack[p] holds the open arc at position p+1.
  std::vector<int> stack;
  struct End {
    // where an arc terminates on each side: cusp index, or crossing index
    // with the role the arc plays there
    enum class Kind { none, cusp, cross_lower, cross_upper } kind = Kind::none;
    int index = -1;
  };
  std::vector<End> left_end, right_end;

  auto new_arc = [&](End::Kind kind, int index) {
    left_end.push_back({kind, index});
    right_end.push_back({});
    return arc_count_++;
  };

  for (size_t e = 0; e < word_.size(); ++e) {
    const FrontEvent& ev = word_[e];
    const int h = int(stack.size());
    const int i = ev.position;
    switch (ev.type) {
      case FrontEvent::Type::left_cusp: {
        if (i < 1 || i > h + 1)
          throw input_error("left cusp position out of range at event " + std::to_string(e));
        int cusp = int(cusps_.size());
        int lo = new_arc(End::Kind::cusp, cusp);
        int hi = new_arc(End::Kind::cusp, cusp);
        cusps_.push_back({true, int(e), lo, hi});
        stack.insert(stack.begin() + (i - 1), {lo, hi});
        break;
      }
      case FrontEvent::Type::right_cusp: {
        if (i < 1 || i + 1 > h)
          throw input_error("right cusp position out of range at event " + std::to_string(e));
        int cusp = int(cusps_.size());
        int lo = stack[size_t(i - 1)], hi = stack[size_t(i)];
        right_end[size_t(lo)] = {End::Kind::cusp, cusp};
        right_end[size_t(hi)] = {End::Kind::cusp, cusp};
        cusps_.push_back({false, int(e), lo, hi});
        stack.erase(stack.begin() + (i - 1), stack.begin() + (i + 1));
        break;
      }
      case FrontEvent::Type::crossing: {
        if (i < 1 || i + 1 > h)
          throw input_error("crossing position out of range at event " + std::to_string(e));
        int x = int(crossings_.size());
        int lo_in = stack[size_t(i - 1)], up_in = stack[size_t(i)];
        right_end[size_t(lo_in)] = {End::Kind::cross_lower, x};
        right_end[size_t(up_in)] = {End::Kind::cross_upper, x};
        // the strand from i+1 descends over; the one from i goes under
        int lo_out = new_arc(End::Kind::cross_lower, x);
        int up_out = new_arc(End::Kind::cross_upper, x);
        crossings_.push_back({int(e), lo_in, up_in, lo_out, up_out});
        stack[size_t(i - 1)] = lo_out;
        stack[size_t(i)] = up_out;
        break;
      }
    }
  }
  if (!stack.empty())
    throw input_error("front word ends with " + std::to_string(stack.size()) +
                      " open strands");

  // Walk the closed curves. Moving right, an arc continues through its
  // right end; moving left, through its left end. Cusps reverse direction.
  arc_comp_.assign(size_t(arc_count_), -1);
  arc_canonical_right_.assign(size_t(arc_count_), true);
  component_anchor_.clear();
  component_arc_count_.clear();

  std::vector<bool> cusp_seen(cusps_.size(), false);
  for (size_t anchor = 0; anchor < cusps_.size(); ++anchor) {
    if (!cusps_[anchor].left || cusp_seen[anchor]) continue;
    const int comp = int(component_anchor_.size());
    component_anchor_.push_back(cusps_[anchor].event);
    int count = 0;

    int arc = cusps_[anchor].lower;
    bool right = true;
    do {
      if (arc_comp_[size_t(arc)] != -1)
        throw internal_error("front component walk revisited an arc");
      arc_comp_[size_t(arc)] = comp;
      arc_canonical_right_[size_t(arc)] = right;
      ++count;
      const End& end = right ? right_end[size_t(arc)] : left_end[size_t(arc)];
      switch (end.kind) {
        case End::Kind::cusp: {
          const Cusp& c = cusps_[size_t(end.index)];
          cusp_seen[size_t(end.index)] = true;
          arc = (arc == c.lower) ? c.upper : c.lower;
          right = !right;
          break;
        }
        case End::Kind::cross_lower: {
          const Cross& x = crossings_[size_t(end.index)];
          // lower_in <-> upper_out is the under strand, lower_out <-> upper_in over
          arc = right ? (arc == x.lower_in ? x.upper_out : x.upper_in)
                      : (arc == x.lower_out ? x.upper_in : x.upper_out);
          break;
        }
        case End::Kind::cross_upper: {
          const Cross& x = crossings_[size_t(end.index)];
          arc = right ? (arc == x.upper_in ? x.lower_out : x.lower_in)
                      : (arc == x.upper_out ? x.lower_in : x.lower_out);
          break;
        }
        case End::Kind::none:
          throw internal_error("arc with an open end survived validation");
      }
    } while (!(arc == cusps_[anchor].lower && right));
    component_arc_count_.push_back(count);
  }

  for (int a = 0; a < arc_count_; ++a)
    if (arc_comp_[size_t(a)] == -1)
      throw internal_error("front arc not reached by any component walk");
}

bool OrientedFront::arc_dir_right(int arc) const {
  bool canon = arc_canonical_right_[size_t(arc)];
  return orientations_[size_t(arc_comp_[size_t(arc)])] ? canon : !canon;
}

int OrientedFront::cross_sign(const Cross& x) const {
  // sign of a front crossing is the product of the horizontal directions
  int over = arc_dir_right(x.upper_in) ? 1 : -1;
  int under = arc_dir_right(x.lower_in) ? 1 : -1;
  return over * under;
}

bool OrientedFront::cusp_down(const Cusp& c) const {
  // down: the traversal passes from the upper strand to the lower one
  return c.left ? arc_dir_right(c.lower) : arc_dir_right(c.upper);
}

ClassicalInvariants OrientedFront::invariants() const {
  ClassicalInvariants inv;
  inv.cusps = cusp_count();
  for (const Cusp& c : cusps_)
    (cusp_down(c) ? inv.down_cusps : inv.up_cusps)++;
  for (const Cross& x : crossings_) inv.writhe += cross_sign(x);
  inv.tb = inv.writhe - inv.cusps / 2;
  inv.rot = (inv.down_cusps - inv.up_cusps) / 2;
  return inv;
}

ClassicalInvariants OrientedFront::component_invariants(int comp) const {
  if (comp < 0 || comp >= component_count())
    throw input_error("component index out of range");
  ClassicalInvariants inv;
  for (const Cusp& c : cusps_) {
    if (arc_component(c.lower) != comp) continue;
    ++inv.cusps;
    (cusp_down(c) ? inv.down_cusps : inv.up_cusps)++;
  }
  for (const Cross& x : crossings_) {
    if (arc_component(x.lower_in) != comp || arc_component(x.upper_in) != comp) continue;
    inv.writhe += cross_sign(x);
  }
  inv.tb = inv.writhe - inv.cusps / 2;
  inv.rot = (inv.down_cusps - inv.up_cusps) / 2;
  return inv;
}

OrientedFront OrientedFront::stabilized(int component, int sign) const {
  if (component < 0 || component >= component_count())
    throw input_error("component index out of range");
  if (sign != 1 && sign != -1) throw input_error("stabilization sign must be +-1");

  const int anchor_event = component_anchor_[size_t(component)];
  const int i = word_[size_t(anchor_event)].position;

  auto insert_variant = [&](bool above) {
    FrontWord w = word_;
    FrontWord zigzag = above ? FrontWord{left_cusp(i + 1), right_cusp(i)}
                             : FrontWord{left_cusp(i), right_cusp(i + 1)};
    w.insert(w.begin() + anchor_event + 1, zigzag.begin(), zigzag.end());
    return OrientedFront(std::move(w), orientations_);
  };

  const Int rot_before = invariants().rot;
  OrientedFront cand = insert_variant(true);
  if (cand.invariants().rot - rot_before == sign) return cand;
  OrientedFront other = insert_variant(false);
  if (other.invariants().rot - rot_before != sign)
    throw internal_error("stabilization variants failed to realize the requested sign");
  return other;
}

OrientedLinkDiagram OrientedFront::to_pd(std::vector<int>* component_map) const {
  // merge arcs across cusps: the classes are the PD edges
  std::vector<int> parent(static_cast<size_t>(arc_count_));
  for (int a = 0; a < arc_count_; ++a) parent[size_t(a)] = a;
  auto find = [&](int x) {
    while (parent[size_t(x)] != x) {
      parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
      x = parent[size_t(x)];
    }
    return x;
  };
  for (const Cusp& c : cusps_) parent[size_t(find(c.lower))] = find(c.upper);

  // arc endpoints, as in build()
  struct EndRef {
    int kind = 0;  // 1 cusp, 2 crossing
    int index = -1;
  };
  std::vector<EndRef> lend(static_cast<size_t>(arc_count_));
  std::vector<EndRef> rend(static_cast<size_t>(arc_count_));
  for (size_t ci = 0; ci < cusps_.size(); ++ci) {
    const Cusp& c = cusps_[ci];
    (c.left ? lend : rend)[size_t(c.lower)] = {1, int(ci)};
    (c.left ? lend : rend)[size_t(c.upper)] = {1, int(ci)};
  }
  for (size_t xi = 0; xi < crossings_.size(); ++xi) {
    const Cross& x = crossings_[xi];
    rend[size_t(x.lower_in)] = {2, int(xi)};
    rend[size_t(x.upper_in)] = {2, int(xi)};
    lend[size_t(x.lower_out)] = {2, int(xi)};
    lend[size_t(x.upper_out)] = {2, int(xi)};
  }

  // advance one arc along the strand; true when a crossing was traversed
  auto step_strand = [&](int& arc, bool& right) {
    const EndRef& e = right ? rend[size_t(arc)] : lend[size_t(arc)];
    if (e.kind == 1) {
      const Cusp& c = cusps_[size_t(e.index)];
      arc = (arc == c.lower) ? c.upper : c.lower;
      right = !right;
      return false;
    }
    const Cross& x = crossings_[size_t(e.index)];
    if (right)
      arc = (arc == x.lower_in) ? x.upper_out : x.lower_out;
    else
      arc = (arc == x.upper_out) ? x.lower_in : x.upper_in;
    return true;
  };

  // Label the classes consecutively along each oriented component, with a
  // new label after every crossing passage.
  std::vector<int> label(static_cast<size_t>(arc_count_), 0);
  std::vector<int> pd_comp_of_front_comp(static_cast<size_t>(component_count()), -1);
  int next_label = 1;
  int pd_components = 0;

  for (int comp = 0; comp < component_count(); ++comp) {
    int anchor_cusp = -1;
    for (size_t ci = 0; ci < cusps_.size(); ++ci)
      if (cusps_[ci].left && cusps_[ci].event == component_anchor_[size_t(comp)]) {
        anchor_cusp = int(ci);
        break;
      }
    const Cusp& ac = cusps_[size_t(anchor_cusp)];
    const bool flag = orientations_[size_t(comp)];

    // reversed components start on the upper arc instead, which the
    // reversed traversal leaves rightward
    int arc = flag ? ac.lower : ac.upper;
    bool right = true;
    const int start_arc = arc;
    const bool start_right = right;

    std::vector<std::pair<int, bool>> runs;  // (arc, crossed-into-this-arc)
    bool crossed = false;
    do {
      runs.push_back({arc, crossed});
      crossed = step_strand(arc, right);
    } while (!(arc == start_arc && right == start_right));
    const bool wrap_crossed = crossed;

    int n_passages = wrap_crossed ? 1 : 0;
    for (auto& r : runs) n_passages += r.second ? 1 : 0;
    if (n_passages == 0) {
      pd_comp_of_front_comp[size_t(comp)] = -2;  // zero-crossing unknot
      continue;
    }
    pd_comp_of_front_comp[size_t(comp)] = pd_components++;

    // rotate so the sequence starts right after a crossing passage
    size_t first = 0;
    if (!wrap_crossed)
      while (first < runs.size() && !runs[first].second) ++first;

    int current = next_label;
    for (size_t k = 0; k < runs.size(); ++k) {
      size_t pos = (first + k) % runs.size();
      if (k > 0) {
        bool boundary = (pos == 0) ? wrap_crossed : runs[pos].second;
        if (boundary) ++current;
      }
      label[size_t(find(runs[pos].first))] = current;
    }
    next_label = current + 1;
  }

  // zero-crossing components come after the labeled ones
  int pd_total = pd_components;
  for (int comp = 0; comp < component_count(); ++comp)
    if (pd_comp_of_front_comp[size_t(comp)] == -2)
      pd_comp_of_front_comp[size_t(comp)] = pd_total++;

  std::vector<Crossing> pd;
  for (const Cross& x : crossings_) {
    int a = label[size_t(find(x.lower_in))];
    int b = label[size_t(find(x.upper_in))];
    int c = label[size_t(find(x.lower_out))];
    int d = label[size_t(find(x.upper_out))];
    // under strand is lower_in -> upper_out; compass: lower_in SW,
    // upper_in NW, lower_out SE, upper_out NE
    Crossing cr{};
    if (arc_dir_right(x.lower_in)) {
      cr.arcs = {a, c, d, b};  // CCW from SW: SW, SE, NE, NW
    } else {
      cr.arcs = {d, b, a, c};  // CCW from NE: NE, NW, SW, SE
    }
    pd.push_back(cr);
  }

  OrientedLinkDiagram diagram =
      OrientedLinkDiagram::from_crossings(std::move(pd), component_count());
  if (component_map) *component_map = pd_comp_of_front_comp;
  return diagram;
}

OrientedFront validate_front(const FrontWord& w) { return OrientedFront(w); }

ClassicalInvariants classical_invariants(const OrientedFront& f) { return f.invariants(); }

OrientedFront stabilize(const OrientedFront& f, int component, int sign) {
  return f.stabilized(component, sign);
}

OrientedLinkDiagram front_to_pd(const OrientedFront& f) { return f.to_pd(); }

SteinTrace stein_trace(const std::vector<OrientedFront>& fronts, std::optional<IntMat> linking) {
  const int n = int(fronts.size());
  if (n == 0) throw input_error("stein trace needs at least one front");
  for (const OrientedFront& f : fronts)
    if (f.component_count() != 1)
      throw input_error("each Stein-trace front must be a single component");

  IntMat q(n, n);
  std::vector<Int> c1;
  for (int i = 0; i < n; ++i) {
    ClassicalInvariants inv = fronts[size_t(i)].invariants();
    q(i, i) = inv.tb - 1;
    c1.push_back(inv.rot);
  }

  if (linking) {
    if (linking->rows() != n || linking->cols() != n)
      throw input_error("linking matrix dimension does not match front count");
    if (*linking != linking->transpose())
      throw input_error("linking matrix must be symmetric");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) q(i, j) = (*linking)(i, j);
  } else if (n > 1) {
    // smooth the split union and reuse the audited linking computation
    FrontWord all;
    std::vector<bool> flags;
    for (const OrientedFront& f : fronts) {
      all.insert(all.end(), f.word().begin(), f.word().end());
      flags.push_back(f.orientation(0));
    }
    OrientedFront unioned(all, flags);
    std::vector<int> cmap;
    OrientedLinkDiagram pd = unioned.to_pd(&cmap);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Int lk = linking_number(pd, cmap[size_t(i)], cmap[size_t(j)]);
        q(i, j) = lk;
        q(j, i) = lk;
      }
  }

  SteinTrace t;
  t.form = SymmetricForm(q);
  t.c1 = std::move(c1);
  return t;
}

namespace {

Int ceil_div2(Int n) { return n >= 0 ? (n + 1) / 2 : -((-n) / 2); }

}  // namespace

GenusBound slice_bennequin_bound(const OrientedFront& f) {
  ClassicalInvariants inv = f.invariants();
  GenusBound b;
  b.kind = "slice-bennequin";
  b.tb = inv.tb;
  b.rot = inv.rot;
  b.bound = ceil_div2(inv.tb + std::abs(inv.rot) + 1);
  return b;
}

GenusBound adjunction_bound(const SteinTrace& trace, const IntVec& cls) {
  if (cls.size() != trace.form.rank())
    throw input_error("class length does not match trace rank");
  if (cls.isZero())
    throw input_error("adjunction inequality needs a nonzero class");
  GenusBound b;
  b.kind = "adjunction";
  b.square = trace.form.pair(cls, cls);
  Int pair = 0;
  for (int i = 0; i < cls.size(); ++i)
    pair = checked_add(pair, checked_mul(cls(i), trace.c1[size_t(i)]));
  b.pairing = pair;
  Int raw = ceil_div2(b.square + std::abs(pair) + 2);
  b.bound = std::max<Int>(0, raw);
  return b;
}

GenusBound thom_bound(Int degree) {
  if (degree == 0) throw input_error("Thom bound needs a nonzero degree");
  GenusBound b;
  b.kind = "thom";
  b.degree = degree;
  b.bound = (degree - 1) * (degree - 2) / 2;
  return b;
}

}  // namespace kirby
