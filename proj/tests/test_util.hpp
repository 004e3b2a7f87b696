#pragma once

// Shared oracles and diagram builders for the test suites. Everything here
// is independent of the library paths it checks: the Goeritz determinant
// goes through checkerboard colorings, and braid closures build PD codes
// from scratch.

#include <kirby/alexander.hpp>
#include <kirby/laurent.hpp>
#include <kirby/legendrian.hpp>
#include <kirby/linkdiag.hpp>
#include <kirby/zlinalg.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace kirby_test {

using kirby::Crossing;
using kirby::Int;
using kirby::IntMat;
using kirby::LaurentPoly;
using kirby::OrientedLinkDiagram;

// Closure of a braid word on `strands` strands. Letters are +-k for the
// generator swapping positions k, k+1; positive letters make positive
// crossings when all strands are oriented along the braid.
inline OrientedLinkDiagram braid_to_pd(int strands, const std::vector<int>& word) {
  struct AbstractCrossing {
    int a[4];  // CCW from under-in, abstract arc ids
  };
  std::vector<AbstractCrossing> crossings;
  std::vector<int> cur(static_cast<size_t>(strands));
  std::vector<int> initial(static_cast<size_t>(strands));
  int next_arc = 0;
  for (int p = 0; p < strands; ++p) cur[size_t(p)] = initial[size_t(p)] = next_arc++;

  // per-crossing strand transitions: in-arc -> out-arc
  std::vector<std::pair<int, int>> succ_pairs;

  for (int letter : word) {
    int k = std::abs(letter);
    if (k < 1 || k >= strands) throw std::runtime_error("bad braid letter");
    int a_low = cur[size_t(k - 1)], a_up = cur[size_t(k)];
    int b_low = next_arc++, b_up = next_arc++;
    AbstractCrossing c{};
    if (letter > 0) {
      // ascending strand (from k) goes under: CCW from SW
      c = {{a_low, b_low, b_up, a_up}};
    } else {
      // descending strand (from k+1) goes under: CCW from NW
      c = {{a_up, a_low, b_low, b_up}};
    }
    crossings.push_back(c);
    succ_pairs.push_back({a_low, b_up});
    succ_pairs.push_back({a_up, b_low});
    cur[size_t(k - 1)] = b_low;
    cur[size_t(k)] = b_up;
  }

  // closure identifies each strand's final arc with its initial arc
  std::vector<int> parent(static_cast<size_t>(next_arc));
  for (int i = 0; i < next_arc; ++i) parent[size_t(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[size_t(x)] != x) {
      parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
      x = parent[size_t(x)];
    }
    return x;
  };
  for (int p = 0; p < strands; ++p)
    parent[size_t(find(cur[size_t(p)]))] = find(initial[size_t(p)]);

  std::map<int, int> succ;
  for (auto& [in, out] : succ_pairs) succ[find(in)] = find(out);

  // number the edge classes consecutively along each component
  std::map<int, int> label;
  int next_label = 1;
  int free_components = 0;
  for (int start = 0; start < next_arc; ++start) {
    int s = find(start);
    if (label.count(s)) continue;
    if (!succ.count(s)) {
      ++free_components;  // strand with no crossings closes to a split unknot
      label[s] = 0;
      continue;
    }
    int a = s;
    do {
      label[a] = next_label++;
      a = succ.at(a);
    } while (a != s);
  }

  std::vector<Crossing> pd;
  for (const AbstractCrossing& c : crossings) {
    Crossing out{};
    for (int i = 0; i < 4; ++i) out.arcs[size_t(i)] = label.at(find(c.a[i]));
    pd.push_back(out);
  }
  int components = 0;
  {
    std::vector<bool> seen;
    OrientedLinkDiagram d = OrientedLinkDiagram::from_crossings(pd);
    components = d.component_count();
    (void)seen;
    return OrientedLinkDiagram::from_crossings(pd, components + free_components);
  }
}

// |det K| through the Goeritz matrix of a checkerboard coloring; fully
// independent of the Alexander/Fox route.
inline Int goeritz_determinant(const OrientedLinkDiagram& d) {
  const int c_count = d.crossing_count();
  if (c_count == 0) return 1;

  // Faces of the 4-valent diagram. Tokens are arrivals (crossing, slot);
  // a face walk leaves through the clockwise-adjacent slot.
  auto token = [&](int c, int s) { return 4 * c + s; };
  std::vector<std::vector<std::pair<int, int>>> occ(static_cast<size_t>(d.arc_count()) + 1);
  for (int c = 0; c < c_count; ++c)
    for (int s = 0; s < 4; ++s)
      occ[size_t(d.crossings()[size_t(c)].arcs[size_t(s)])].push_back({c, s});

  auto other_end = [&](int c, int s) {
    int arc = d.crossings()[size_t(c)].arcs[size_t(s)];
    for (auto& [c2, s2] : occ[size_t(arc)])
      if (c2 != c || s2 != s) return std::make_pair(c2, s2);
    throw std::runtime_error("arc with a single occurrence");
  };

  std::vector<int> face(static_cast<size_t>(4 * c_count), -1);
  int n_faces = 0;
  for (int t0 = 0; t0 < 4 * c_count; ++t0) {
    if (face[size_t(t0)] != -1) continue;
    int f = n_faces++;
    int c = t0 / 4, s = t0 % 4;
    while (face[size_t(token(c, s))] == -1) {
      face[size_t(token(c, s))] = f;
      int s_out = (s + 3) % 4;
      auto [c2, s2] = other_end(c, s_out);
      c = c2;
      s = s2;
    }
  }
  if (n_faces != c_count + 2)
    throw std::runtime_error("face count is not C+2; diagram not planar-consistent");

  // checkerboard 2-coloring: the faces on the two sides of an arc differ
  std::vector<int> color(static_cast<size_t>(n_faces), -1);
  std::vector<std::vector<int>> adj(static_cast<size_t>(n_faces));
  for (int arc = 1; arc <= d.arc_count(); ++arc) {
    int f1 = face[size_t(token(occ[size_t(arc)][0].first, occ[size_t(arc)][0].second))];
    int f2 = face[size_t(token(occ[size_t(arc)][1].first, occ[size_t(arc)][1].second))];
    adj[size_t(f1)].push_back(f2);
    adj[size_t(f2)].push_back(f1);
  }
  std::vector<int> queue{0};
  color[0] = 0;
  while (!queue.empty()) {
    int f = queue.back();
    queue.pop_back();
    for (int g : adj[size_t(f)]) {
      if (color[size_t(g)] == -1) {
        color[size_t(g)] = 1 - color[size_t(f)];
        queue.push_back(g);
      } else if (color[size_t(g)] == color[size_t(f)]) {
        throw std::runtime_error("diagram faces are not checkerboard-colorable");
      }
    }
  }

  // Goeritz matrix over the white faces. Corner k at a crossing sits
  // between slots k and k+1 and belongs to the face of token (c, k+1).
  auto corner_face = [&](int c, int k) { return face[size_t(token(c, (k + 1) % 4))]; };
  const int white = 0;
  std::vector<int> white_index(static_cast<size_t>(n_faces), -1);
  int n_white = 0;
  for (int f = 0; f < n_faces; ++f)
    if (color[size_t(f)] == white) white_index[size_t(f)] = n_white++;

  IntMat g = IntMat::Zero(n_white, n_white);
  for (int c = 0; c < c_count; ++c) {
    std::vector<int> whites;
    for (int k = 0; k < 4; ++k)
      if (color[size_t(corner_face(c, k))] == white) whites.push_back(k);
    if (whites.size() != 2 || (whites[0] + 2) % 4 != whites[1] % 4)
      throw std::runtime_error("white corners are not opposite");
    Int eta = (whites[0] == 1) ? 1 : -1;  // {1,3} one type, {0,2} the other
    int fi = white_index[size_t(corner_face(c, whites[0]))];
    int fj = white_index[size_t(corner_face(c, whites[1]))];
    if (fi == fj) continue;
    g(fi, fj) -= eta;
    g(fj, fi) -= eta;
  }
  for (int i = 0; i < n_white; ++i) {
    Int row = 0;
    for (int j = 0; j < n_white; ++j)
      if (j != i) row += g(i, j);
    g(i, i) = -row;
  }
  if (n_white <= 1) return 1;
  IntMat minor = g.topLeftCorner(n_white - 1, n_white - 1);
  return std::abs(kirby::bareiss_determinant(minor));
}

struct TableKnot {
  std::string name;
  int strands;
  std::vector<int> braid;
  LaurentPoly delta;  // normalized
};

inline LaurentPoly sym_poly(std::initializer_list<Int> coeffs) {
  // coefficients listed from the lowest exponent, centered around 0
  LaurentPoly p;
  Int n = Int(coeffs.size());
  Int e = -(n - 1) / 2;
  for (Int c : coeffs) p += LaurentPoly::monomial(c, e++);
  return p;
}

// Knots through 8 crossings with frozen normalized Alexander polynomials.
// Braid words are classical presentations; each entry's polynomial is
// re-verified against the Goeritz oracle by the test suites.
inline const std::vector<TableKnot>& knot_table() {
  static const std::vector<TableKnot> table = {
      {"3_1", 2, {1, 1, 1}, sym_poly({1, -1, 1})},
      {"m3_1", 2, {-1, -1, -1}, sym_poly({1, -1, 1})},
      {"4_1", 3, {1, -2, 1, -2}, sym_poly({-1, 3, -1})},
      {"5_1", 2, {1, 1, 1, 1, 1}, sym_poly({1, -1, 1, -1, 1})},
      {"5_2", 3, {1, 1, 1, 2, -1, 2}, sym_poly({2, -3, 2})},
      {"6_1", 4, {1, 1, 2, -1, -3, 2, -3}, sym_poly({-2, 5, -2})},
      {"6_2", 3, {1, 1, 1, -2, 1, -2}, sym_poly({-1, 3, -3, 3, -1})},
      {"6_3", 3, {1, 1, -2, 1, -2, -2}, sym_poly({1, -3, 5, -3, 1})},
      {"7_1", 2, {1, 1, 1, 1, 1, 1, 1}, sym_poly({1, -1, 1, -1, 1, -1, 1})},
      {"8_19", 3, {1, 2, 1, 2, 1, 2, 1, 2}, sym_poly({1, -1, 0, 1, 0, -1, 1})},
  };
  return table;
}

// A 9-crossing braid presentation whose closure has the 9_42 Alexander
// polynomial and determinant 7. No knot through 8 crossings shares that
// polynomial, which pins the knot type (up to mirror).
inline OrientedLinkDiagram nine_42() {
  return braid_to_pd(4, {1, 1, 1, -2, -1, -1, 3, -2, 3});
}

// Frozen front words. The trefoil front realizes (tb, rot) = (1, 0); the
// figure-eight front realizes (-3, 0); both knots are re-verified through
// front_to_pd and the Alexander polynomial by the suites.
inline kirby::FrontWord trefoil_front_word() {
  using namespace kirby;
  return {left_cusp(1), left_cusp(1), crossing(2), crossing(2), crossing(2),
          right_cusp(3), right_cusp(1)};
}

inline kirby::FrontWord figure_eight_front_word() {
  using namespace kirby;
  return {left_cusp(1),  left_cusp(1), left_cusp(1), crossing(2), crossing(2),
          crossing(4),   right_cusp(3), crossing(2),  right_cusp(1), right_cusp(1)};
}

// Translate-doubling of a front word: each strand becomes two parallel
// copies (one crossing per doubled cusp keeps the annulus at the contact
// framing), and a clasp tangle on the first strand pair joins the copies
// into the double of the companion knot.
inline kirby::FrontWord double_with_clasp(const kirby::FrontWord& w) {
  using namespace kirby;
  FrontWord out;
  bool clasp_done = false;
  for (const FrontEvent& e : w) {
    int i = e.position;
    switch (e.type) {
      case FrontEvent::Type::left_cusp:
        out.push_back(left_cusp(2 * i - 1));
        out.push_back(left_cusp(2 * i + 1));
        out.push_back(crossing(2 * i));
        break;
      case FrontEvent::Type::right_cusp:
        out.push_back(crossing(2 * i));
        out.push_back(right_cusp(2 * i - 1));
        out.push_back(right_cusp(2 * i - 1));
        break;
      case FrontEvent::Type::crossing:
        out.push_back(crossing(2 * i));
        out.push_back(crossing(2 * i - 1));
        out.push_back(crossing(2 * i + 1));
        out.push_back(crossing(2 * i));
        break;
    }
    if (!clasp_done) {
      out.push_back(left_cusp(2));
      out.push_back(crossing(1));
      out.push_back(crossing(3));
      out.push_back(right_cusp(2));
      clasp_done = true;
    }
  }
  return out;
}

// The untwisted clasped double of the once-stabilized trefoil: a Legendrian
// with tb = 1, rot = 0 whose knot has trivial Alexander polynomial, so it
// is topologically slice yet obstructed smoothly by slice-Bennequin.
inline kirby::FrontWord topologically_slice_front_word() {
  kirby::OrientedFront trefoil{trefoil_front_word()};
  return double_with_clasp(kirby::stabilize(trefoil, 0, 1).word());
}

// Random valid fronts by rejection-free simulation: random legal events,
// then right cusps until every strand closes.
inline kirby::FrontWord random_front_word(std::mt19937& rng, int body_events = 10) {
  using namespace kirby;
  FrontWord w;
  int height = 0;
  for (int k = 0; k < body_events; ++k) {
    std::vector<FrontEvent> options;
    for (int i = 1; i <= height + 1 && i <= 5; ++i) options.push_back(left_cusp(i));
    for (int i = 1; i + 1 <= height; ++i) {
      options.push_back(crossing(i));
      options.push_back(crossing(i));  // bias toward crossings
      options.push_back(right_cusp(i));
    }
    const FrontEvent& e = options[rng() % options.size()];
    w.push_back(e);
    if (e.type == FrontEvent::Type::left_cusp) height += 2;
    if (e.type == FrontEvent::Type::right_cusp) height -= 2;
  }
  while (height > 0) {
    int i = 1 + int(rng() % (height - 1 == 0 ? 1 : height - 1));
    w.push_back(kirby::right_cusp(i));
    height -= 2;
  }
  return w;
}

inline OrientedLinkDiagram table_diagram(const TableKnot& k) {
  return braid_to_pd(k.strands, k.braid);
}

}  // namespace kirby_test
