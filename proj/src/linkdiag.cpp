#include <kirby/linkdiag.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace kirby {

namespace {

// occurrence of an arc at (crossing, slot)
struct Occ {
  int crossing;
  int slot;
};

int positive_mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

const std::vector<int>& OrientedLinkDiagram::component_arcs(int i) const {
  if (i < 0 || i >= component_count()) throw input_error("component index out of range");
  return components_[size_t(i)];
}

int OrientedLinkDiagram::component_of_arc(int arc) const {
  if (arc < 1 || arc > arc_count()) throw input_error("arc label out of range");
  return comp_of_arc_[size_t(arc)];
}

int OrientedLinkDiagram::over_in_slot(int crossing) const {
  return over_in_[size_t(crossing)];
}

int OrientedLinkDiagram::under_component(int crossing) const {
  return component_of_arc(crossings_[size_t(crossing)].arcs[0]);
}

int OrientedLinkDiagram::over_component(int crossing) const {
  return component_of_arc(crossings_[size_t(crossing)].arcs[size_t(over_in_[size_t(crossing)])]);
}

int OrientedLinkDiagram::crossing_sign(int crossing) const {
  // with under-in at S: over running W->E is positive, E->W negative;
  // reversing either strand's component flips the sign
  int s = over_in_[size_t(crossing)] == 3 ? 1 : -1;
  if (!orientations_[size_t(under_component(crossing))]) s = -s;
  if (!orientations_[size_t(over_component(crossing))]) s = -s;
  return s;
}

int OrientedLinkDiagram::writhe() const {
  int w = 0;
  for (int c = 0; c < crossing_count(); ++c) w += crossing_sign(c);
  return w;
}

OrientedLinkDiagram OrientedLinkDiagram::reversed(int component) const {
  if (component < 0 || component >= component_count())
    throw input_error("component index out of range");
  OrientedLinkDiagram d = *this;
  d.orientations_[size_t(component)] = !d.orientations_[size_t(component)];
  return d;
}

OrientedLinkDiagram OrientedLinkDiagram::from_crossings(std::vector<Crossing> crossings,
                                                        int declared_components) {
  OrientedLinkDiagram d;
  d.crossings_ = std::move(crossings);
  d.resolve();

  const int derived = d.component_count();
  if (declared_components >= 0) {
    if (declared_components < derived)
      throw input_error("declared component count below the count derived from crossings");
    for (int k = derived; k < declared_components; ++k) {
      d.components_.emplace_back();  // zero-crossing unknot
      d.orientations_.push_back(true);
    }
  }
  return d;
}

void OrientedLinkDiagram::resolve() {
  const int c_count = int(crossings_.size());
  const int n_arcs = 2 * c_count;

  std::vector<std::vector<Occ>> occ(size_t(n_arcs) + 1);
  for (int c = 0; c < c_count; ++c)
    for (int s = 0; s < 4; ++s) {
      int a = crossings_[size_t(c)].arcs[size_t(s)];
      if (a < 1 || a > n_arcs)
        throw input_error("arc label " + std::to_string(a) + " out of range 1.." +
                          std::to_string(n_arcs));
      occ[size_t(a)].push_back({c, s});
    }
  for (int a = 1; a <= n_arcs; ++a)
    if (occ[size_t(a)].size() != 2)
      throw input_error("arc " + std::to_string(a) + " appears " +
                        std::to_string(occ[size_t(a)].size()) + " times (expected 2)");

  // Decide the over-strand direction at each crossing. Under slots force
  // in/out roles; those propagate through shared arcs. Crossings that stay
  // undecided (components that never go under) fall back to the arc
  // numbering rule: successor is label+1, or the wrap from the component's
  // largest label to its smallest.
  over_in_.assign(size_t(c_count), -1);

  // role of an occurrence: 1 = in, -1 = out, 0 = unknown
  auto role = [&](const Occ& o) -> int {
    if (o.slot == 0) return 1;
    if (o.slot == 2) return -1;
    int oi = over_in_[size_t(o.crossing)];
    if (oi < 0) return 0;
    return o.slot == oi ? 1 : -1;
  };

  int undecided = c_count;

  auto decide = [&](int c, int slot_in) {
    if (over_in_[size_t(c)] == slot_in) return;
    if (over_in_[size_t(c)] != -1)
      throw input_error("inconsistent strand successor relation at crossing " +
                        std::to_string(c));
    over_in_[size_t(c)] = slot_in;
    --undecided;
  };

  bool progress = true;
  while (undecided > 0) {
    if (!progress) {
      // numbering-rule fallback on the first undecided crossing
      int c = -1;
      for (int k = 0; k < c_count; ++k)
        if (over_in_[size_t(k)] < 0) { c = k; break; }
      const auto& a = crossings_[size_t(c)].arcs;
      int b = a[1], dd = a[3];
      if (dd == b + 1)
        decide(c, 1);
      else if (b == dd + 1)
        decide(c, 3);
      else
        decide(c, b > dd ? 1 : 3);  // wrap runs from the larger label down
    }
    progress = false;
    for (int a = 1; a <= n_arcs; ++a) {
      const Occ &o1 = occ[size_t(a)][0], &o2 = occ[size_t(a)][1];
      int r1 = role(o1), r2 = role(o2);
      if (r1 != 0 && r2 == 0) {
        decide(o2.crossing, r1 == 1 ? (o2.slot == 1 ? 3 : 1) : o2.slot);
        progress = true;
      } else if (r2 != 0 && r1 == 0) {
        decide(o1.crossing, r2 == 1 ? (o1.slot == 1 ? 3 : 1) : o1.slot);
        progress = true;
      }
    }
  }

  // balance check: every arc consumed once and produced once
  for (int a = 1; a <= n_arcs; ++a) {
    int sum = role(occ[size_t(a)][0]) + role(occ[size_t(a)][1]);
    if (sum != 0)
      throw input_error("arc " + std::to_string(a) +
                        " is not consumed exactly once and produced exactly once");
  }

  // successor along the strand: out-arc of the crossing where the arc is consumed
  std::vector<int> succ(size_t(n_arcs) + 1, 0);
  for (int c = 0; c < c_count; ++c) {
    const auto& a = crossings_[size_t(c)].arcs;
    succ[size_t(a[0])] = a[2];
    int oi = over_in_[size_t(c)];
    succ[size_t(a[size_t(oi)])] = a[size_t(oi == 1 ? 3 : 1)];
  }

  components_.clear();
  comp_of_arc_.assign(size_t(n_arcs) + 1, -1);
  std::vector<bool> seen(size_t(n_arcs) + 1, false);
  for (int start = 1; start <= n_arcs; ++start) {
    if (seen[size_t(start)]) continue;
    std::vector<int> comp;
    int a = start;
    do {
      if (a < 1 || a > n_arcs || seen[size_t(a)])
        throw input_error("inconsistent strand successor relation");
      seen[size_t(a)] = true;
      comp.push_back(a);
      a = succ[size_t(a)];
    } while (a != start);

    // labels must run consecutively with a single wrap from max to min;
    // starting at the minimal label the traversal must be m, m+1, ..., M
    int m = *std::min_element(comp.begin(), comp.end());
    std::vector<int> rot;
    size_t pos = size_t(std::find(comp.begin(), comp.end(), m) - comp.begin());
    for (size_t k = 0; k < comp.size(); ++k)
      rot.push_back(comp[(pos + k) % comp.size()]);
    for (size_t k = 0; k < rot.size(); ++k)
      if (rot[k] != m + int(k))
        throw input_error("arc numbering is not consecutive along a component");

    for (int arc : rot) comp_of_arc_[size_t(arc)] = int(components_.size());
    components_.push_back(std::move(rot));
  }

  // components ordered by least arc label
  std::sort(components_.begin(), components_.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              return x.front() < y.front();
            });
  for (size_t i = 0; i < components_.size(); ++i)
    for (int arc : components_[i]) comp_of_arc_[size_t(arc)] = int(i);

  orientations_.assign(components_.size(), true);
}

OrientedLinkDiagram parse_pd_diagram(const std::string& text, int declared_components) {
  std::vector<Crossing> crossings;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != 'X' && text[i] != 'x')
      throw input_error("expected 'X' at position " + std::to_string(i));
    ++i;
    skip_ws();
    if (i >= text.size() || (text[i] != '(' && text[i] != '['))
      throw input_error("expected '(' after X");
    char close = text[i] == '(' ? ')' : ']';
    ++i;
    Crossing cr{};
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw input_error("expected arc label at position " + std::to_string(i));
      if (j - i > 7) throw input_error("arc label too large at position " + std::to_string(i));
      cr.arcs[size_t(k)] = std::stoi(text.substr(i, j - i));
      i = j;
      skip_ws();
      if (k < 3) {
        if (i >= text.size() || text[i] != ',')
          throw input_error("expected ',' inside crossing tuple");
        ++i;
      }
    }
    if (i >= text.size() || text[i] != close)
      throw input_error("unterminated crossing tuple");
    ++i;
    crossings.push_back(cr);
    skip_ws();
    if (i < text.size()) {
      if (text[i] != ',')
        throw input_error("expected ',' between crossings at position " + std::to_string(i));
      ++i;
      skip_ws();
      if (i >= text.size()) throw input_error("trailing ',' in PD text");
    }
  }
  return OrientedLinkDiagram::from_crossings(std::move(crossings), declared_components);
}

FramedLink parse_pd(const std::string& text, std::optional<std::vector<Int>> framings,
                    int declared_components) {
  FramedLink fl;
  fl.diagram = parse_pd_diagram(text, declared_components);
  if (framings) {
    if (int(framings->size()) != fl.diagram.component_count())
      throw input_error("framing count " + std::to_string(framings->size()) +
                        " does not match component count " +
                        std::to_string(fl.diagram.component_count()));
    fl.framings = std::move(*framings);
  } else {
    fl.framings.assign(size_t(fl.diagram.component_count()), 0);
  }
  return fl;
}

SignData crossing_signs(const OrientedLinkDiagram& d) {
  SignData out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    out.signs.push_back(d.crossing_sign(c));
    out.writhe += d.crossing_sign(c);
  }
  return out;
}

Int linking_number(const OrientedLinkDiagram& d, int i, int j) {
  if (i == j) throw input_error("linking number needs two distinct components");
  if (i < 0 || j < 0 || i >= d.component_count() || j >= d.component_count())
    throw input_error("component index out of range");
  Int sum = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    int u = d.under_component(c), o = d.over_component(c);
    if ((u == i && o == j) || (u == j && o == i)) sum += d.crossing_sign(c);
  }
  if (sum % 2 != 0)
    throw input_error("half-integral linking number; PD code is not planar-consistent");
  return sum / 2;
}

IntMat linking_matrix(const FramedLink& fl) {
  const int n = fl.diagram.component_count();
  if (int(fl.framings.size()) != n)
    throw input_error("framing count does not match component count");
  IntMat a(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = fl.framings[size_t(i)];
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = linking_number(fl.diagram, i, j);
      a(j, i) = a(i, j);
    }
  }
  return a;
}

OrientedLinkDiagram reverse_component(const OrientedLinkDiagram& d, int i) {
  return d.reversed(i);
}

namespace {

// rewrite a reversed knot as a plain PD: every tuple rotates by two (the
// under strand now enters at the old out slot) and labels renumber so the
// new traversal is 1..N
OrientedLinkDiagram materialize_forward(const OrientedLinkDiagram& d) {
  if (d.component_count() != 1) throw input_error("connected sum needs knot diagrams");
  if (d.orientation(0) || d.crossing_count() == 0) return d;
  const int n = d.arc_count();
  std::vector<Crossing> out;
  for (const Crossing& c : d.crossings()) {
    Crossing r{};
    for (int s = 0; s < 4; ++s)
      r.arcs[size_t(s)] = n + 1 - c.arcs[size_t((s + 2) % 4)];
    out.push_back(r);
  }
  return OrientedLinkDiagram::from_crossings(std::move(out));
}

}  // namespace

OrientedLinkDiagram connected_sum(const OrientedLinkDiagram& d1_in,
                                  const OrientedLinkDiagram& d2_in, int arc1, int arc2) {
  if (d1_in.component_count() != 1 || d2_in.component_count() != 1)
    throw input_error("connected sum needs knot diagrams");
  OrientedLinkDiagram d1 = materialize_forward(d1_in);
  OrientedLinkDiagram d2 = materialize_forward(d2_in);
  if (d1.crossing_count() == 0) return d2;
  if (d2.crossing_count() == 0) return d1;

  const int n1 = d1.arc_count(), n2 = d2.arc_count();
  if (arc1 < 1 || arc1 > n1 || arc2 < 1 || arc2 > n2)
    throw input_error("splice arc out of range");

  // the spliced arcs each split in two; halves pair up across the diagrams
  auto is_in_occurrence = [](const OrientedLinkDiagram& d, int crossing, int slot) {
    if (slot == 0) return true;
    if (slot == 2) return false;
    return slot == d.over_in_slot(crossing);
  };

  std::vector<Crossing> out;
  for (int c = 0; c < d1.crossing_count(); ++c) {
    Crossing cr = d1.crossings()[size_t(c)];
    for (int s = 0; s < 4; ++s) {
      int x = cr.arcs[size_t(s)];
      if (x != arc1)
        cr.arcs[size_t(s)] = n2 + 1 + positive_mod(x - arc1, n1);
      else
        cr.arcs[size_t(s)] = is_in_occurrence(d1, c, s) ? n2 + 1 : 1;
    }
    out.push_back(cr);
  }
  for (int c = 0; c < d2.crossing_count(); ++c) {
    Crossing cr = d2.crossings()[size_t(c)];
    for (int s = 0; s < 4; ++s) {
      int x = cr.arcs[size_t(s)];
      if (x != arc2)
        cr.arcs[size_t(s)] = 1 + positive_mod(x - arc2, n2);
      else
        cr.arcs[size_t(s)] = is_in_occurrence(d2, c, s) ? 1 : n2 + 1;
    }
    out.push_back(cr);
  }
  OrientedLinkDiagram result = OrientedLinkDiagram::from_crossings(std::move(out));
  if (result.component_count() != 1)
    throw internal_error("connected sum did not produce a knot");
  return result;
}

}  // namespace kirby
