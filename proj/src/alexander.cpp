#include <kirby/alexander.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace kirby {

WirtingerData wirtinger_presentation(const OrientedLinkDiagram& d) {
  if (d.component_count() != 1)
    throw input_error("Wirtinger presentation implemented for knots only");
  if (d.crossing_count() == 0)
    throw input_error("zero-crossing diagram has no Wirtinger relations");

  WirtingerData w;
  w.generator_count = d.arc_count();
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& arcs = d.crossings()[size_t(c)].arcs;
    WirtingerRelation r;
    r.in_arc = arcs[0];
    r.out_arc = arcs[2];
    r.over_arc = arcs[size_t(d.over_in_slot(c))];
    r.sign = d.crossing_sign(c);
    w.relations.push_back(r);
  }
  return w;
}

LaurentPoly laurent_determinant(std::vector<std::vector<LaurentPoly>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw input_error("determinant of non-square matrix");
  if (n == 0) return LaurentPoly(1);

  int sign = 1;
  LaurentPoly prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t p = k;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(size_t(n)) {
    for (int i = 0; i < n; ++i) parent[size_t(i)] = i;
  }
  int find(int x) {
    while (parent[size_t(x)] != x) {
      parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
      x = parent[size_t(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[size_t(find(a))] = find(b); }
};

}  // namespace

LaurentPoly alexander_polynomial(const OrientedLinkDiagram& d) {
  if (d.component_count() != 1)
    throw input_error("Alexander polynomial implemented for knots only");
  const int c_count = d.crossing_count();
  if (c_count == 0) return LaurentPoly(1);

  WirtingerData w = wirtinger_presentation(d);

  // merge the over strand's in/out arcs: they are one Wirtinger generator
  UnionFind uf(d.arc_count() + 1);
  for (int c = 0; c < c_count; ++c) {
    const auto& arcs = d.crossings()[size_t(c)].arcs;
    int oi = d.over_in_slot(c);
    uf.unite(arcs[size_t(oi)], arcs[size_t(oi == 1 ? 3 : 1)]);
  }
  std::vector<int> col(size_t(d.arc_count()) + 1, -1);
  int classes = 0;
  for (int a = 1; a <= d.arc_count(); ++a)
    if (uf.find(a) == a) col[size_t(a)] = classes++;
  if (classes != c_count)
    throw internal_error("Wirtinger class count does not match crossing count");

  const LaurentPoly one(1);
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly tinv = LaurentPoly::monomial(1, -1);

  // Fox derivatives of o^s u o^-s w^-1, abelianized (every generator -> t):
  //   s = +1:  d/do = 1 - t,      d/du = t,      d/dw = -1
  //   s = -1:  d/do = 1 - 1/t,    d/du = 1/t,    d/dw = -1
  std::vector<std::vector<LaurentPoly>> m(
      static_cast<size_t>(c_count),
      std::vector<LaurentPoly>(static_cast<size_t>(c_count)));
  for (size_t r = 0; r < w.relations.size(); ++r) {
    const WirtingerRelation& rel = w.relations[r];
    int co = col[size_t(uf.find(rel.over_arc))];
    int cu = col[size_t(uf.find(rel.in_arc))];
    int cw = col[size_t(uf.find(rel.out_arc))];
    const LaurentPoly& tt = rel.sign > 0 ? t : tinv;
    m[r][size_t(co)] += one - tt;
    m[r][size_t(cu)] += tt;
    m[r][size_t(cw)] -= one;
  }

  // delete the last row and column, then take the exact determinant
  std::vector<std::vector<LaurentPoly>> minor(static_cast<size_t>(c_count - 1));
  for (int i = 0; i + 1 < c_count; ++i)
    for (int j = 0; j + 1 < c_count; ++j)
      minor[size_t(i)].push_back(m[size_t(i)][size_t(j)]);
  LaurentPoly det = laurent_determinant(std::move(minor));

  if (det.is_zero())
    throw internal_error("vanishing Alexander determinant; encoding bug");

  // normalize by +-t^k: symmetric exponent range, value 1 at t = 1
  Int span = det.min_exponent() + det.max_exponent();
  if (span % 2 != 0)
    throw internal_error("Alexander polynomial has odd exponent span; encoding bug");
  LaurentPoly centered = det.shifted(-span / 2);
  if (!(centered == centered.reciprocal()))
    throw internal_error("Alexander polynomial is not symmetric; encoding bug");
  Int at_one = centered.evaluate(1);
  if (at_one == 1) return centered;
  if (at_one == -1) return -centered;
  throw internal_error("Alexander polynomial value at 1 is not a unit; encoding bug");
}

Int knot_determinant(const LaurentPoly& delta) {
  return std::abs(delta.evaluate(-1));
}

namespace {

struct Frac {
  Int num = 0, den = 1;
  Frac() = default;
  Frac(Int n) : num(n) {}
  Frac(Int n, Int d) : num(n), den(d) { reduce(); }
  void reduce() {
    if (den == 0) throw internal_error("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Int g = gcd_int(num, den);
    if (g > 1) { num /= g; den /= g; }
  }
};
Frac operator+(const Frac& a, const Frac& b) {
  return Frac(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
              checked_mul(a.den, b.den));
}
Frac operator*(const Frac& a, const Frac& b) {
  return Frac(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

std::vector<Int> divisors_signed(Int v) {
  Int a = std::abs(v);
  std::vector<Int> out;
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    out.push_back(d);
    if (d != a / d) out.push_back(a / d);
  }
  std::sort(out.begin(), out.end());
  std::vector<Int> both;
  for (Int d : out) { both.push_back(d); both.push_back(-d); }
  return both;
}

Int poly_content(const LaurentPoly& p) {
  Int g = 0;
  for (const auto& [e, c] : p.coefficients()) g = gcd_int(g, c);
  return g;
}

// Lagrange interpolation through (points[i], values[i]); empty result when
// the interpolant is not an integer polynomial.
bool interpolate_integer(const std::vector<Int>& points, const std::vector<Int>& values,
                         LaurentPoly& out) {
  const size_t n = points.size();
  std::vector<Frac> coeff(n, Frac(0));  // coefficients of the interpolant
  for (size_t i = 0; i < n; ++i) {
    // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
    std::vector<Frac> basis{Frac(1)};
    Frac denom(1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      basis.push_back(Frac(0));
      for (size_t k = basis.size(); k-- > 1;)
        basis[k] = basis[k - 1] + basis[k] * Frac(-points[j]);
      basis[0] = basis[0] * Frac(-points[j]);
      denom = denom * Frac(points[i] - points[j], 1);
    }
    Frac scale = Frac(values[i]) * Frac(denom.den, denom.num);
    for (size_t k = 0; k < basis.size(); ++k)
      coeff[k] = coeff[k] + basis[k] * scale;
  }
  LaurentPoly p;
  for (size_t k = 0; k < n; ++k) {
    if (coeff[k].den != 1) return false;
    p += LaurentPoly::monomial(coeff[k].num, Int(k));
  }
  out = p;
  return true;
}

bool divides_exactly(const LaurentPoly& f, const LaurentPoly& p, LaurentPoly& quot) {
  try {
    quot = exact_div(p, f);
    return true;
  } catch (const internal_error&) {
    return false;
  }
}

// one nontrivial factor of a primitive polynomial, or false if irreducible
bool kronecker_find_factor(const LaurentPoly& p, LaurentPoly& factor, LaurentPoly& rest) {
  const Int deg = p.max_exponent();
  for (Int d = 1; d <= deg / 2; ++d) {
    std::vector<Int> points;
    for (Int k = 0; Int(points.size()) < d + 1; ++k) {
      points.push_back(k % 2 == 0 ? k / 2 : -(k / 2 + 1));  // 0, -1, 1, -2, 2, ...
    }
    std::vector<std::vector<Int>> choices;
    for (Int x : points) {
      Int v = p.evaluate(x);
      if (v == 0) throw internal_error("unexpected root during Kronecker factorization");
      choices.push_back(divisors_signed(v));
    }
    // factor sign is normalized by a positive value at the first point
    choices[0].erase(std::remove_if(choices[0].begin(), choices[0].end(),
                                    [](Int v) { return v < 0; }),
                     choices[0].end());

    std::vector<size_t> idx(points.size(), 0);
    while (true) {
      std::vector<Int> vals;
      for (size_t i = 0; i < points.size(); ++i) vals.push_back(choices[i][idx[i]]);
      LaurentPoly cand;
      if (interpolate_integer(points, vals, cand) && !cand.is_zero() &&
          cand.max_exponent() >= 1) {
        LaurentPoly quot;
        if (divides_exactly(cand, p, quot)) {
          factor = cand;
          rest = quot;
          return true;
        }
      }
      size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == choices[pos].size()) {
        idx[pos] = 0;
        ++pos;
      }
      if (pos == idx.size()) break;
    }
  }
  return false;
}

void kronecker_recurse(const LaurentPoly& p, std::vector<LaurentPoly>& out) {
  if (p.max_exponent() == 0) throw internal_error("constant reached factor recursion");
  LaurentPoly f, rest;
  if (kronecker_find_factor(p, f, rest)) {
    kronecker_recurse(f, out);
    kronecker_recurse(rest, out);
  } else {
    out.push_back(p);
  }
}

}  // namespace

std::vector<LaurentPoly> kronecker_factor(const LaurentPoly& p) {
  if (p.is_zero()) throw input_error("cannot factor the zero polynomial");
  if (p.min_exponent() < 0)
    throw input_error("kronecker_factor expects a polynomial (no negative exponents)");
  if (p.max_exponent() > 12)
    throw input_error("degree cap exceeded: kronecker_factor handles degree <= 12");

  std::vector<LaurentPoly> out;
  LaurentPoly work = p;

  Int shift = work.min_exponent();
  if (shift > 0) {
    work = work.shifted(-shift);
    for (Int k = 0; k < shift; ++k) out.push_back(LaurentPoly::monomial(1, 1));
  }

  Int content = poly_content(work);
  Int unit = work.leading_coeff() < 0 ? -1 : 1;
  Int constant = content * unit;
  if (constant != 1) {
    out.push_back(LaurentPoly(constant));
    work = exact_div(work, LaurentPoly(constant));
  }
  if (work.max_exponent() == 0) return out;  // the input was a constant

  // strip integer roots first so interpolation points never hit zero values
  bool found_root = true;
  while (found_root && work.max_exponent() >= 1) {
    found_root = false;
    for (Int r : divisors_signed(work.coeff(0))) {
      if (work.evaluate(r) != 0) continue;
      LaurentPoly lin = LaurentPoly::monomial(1, 1) - LaurentPoly(r);
      work = exact_div(work, lin);
      out.push_back(lin);
      found_root = true;
      break;
    }
    if (work.max_exponent() == 0) {
      if (!(work == LaurentPoly(1)))
        throw internal_error("lost a unit during root stripping");
      return out;
    }
  }

  kronecker_recurse(work, out);
  return out;
}

namespace {

LaurentPoly reciprocal_normalized(const LaurentPoly& f) {
  // +-t^deg f(1/t), sign chosen so the leading coefficient is positive
  LaurentPoly r = f.reciprocal().shifted(f.max_exponent());
  if (r.min_exponent() > 0) r = r.shifted(-r.min_exponent());
  if (r.leading_coeff() < 0) r = -r;
  return r;
}

}  // namespace

FoxMilnorReport fox_milnor_test(const LaurentPoly& delta) {
  if (delta.is_zero()) throw input_error("Fox-Milnor test needs a nonzero polynomial");
  FoxMilnorReport rep;
  rep.determinant = knot_determinant(delta);
  Int isq = Int(std::llround(std::sqrt(double(rep.determinant))));
  rep.det_square = isq * isq == rep.determinant ||
                   (isq + 1) * (isq + 1) == rep.determinant ||
                   (isq > 0 && (isq - 1) * (isq - 1) == rep.determinant);

  LaurentPoly q = delta.shifted(-delta.min_exponent());
  if (q.max_exponent() > 12) {
    rep.factor_pairing = PairingVerdict::inconclusive;
    rep.obstructed = !rep.det_square;
    return rep;
  }

  std::vector<LaurentPoly> factors;
  for (const LaurentPoly& f : kronecker_factor(q))
    if (f.max_exponent() >= 1) {
      LaurentPoly g = f.leading_coeff() < 0 ? -f : f;
      factors.push_back(g);
    }

  bool paired = true;
  std::vector<bool> used(factors.size(), false);
  for (size_t i = 0; i < factors.size() && paired; ++i) {
    if (used[i]) continue;
    LaurentPoly want = reciprocal_normalized(factors[i]);
    bool found = false;
    for (size_t j = i + 1; j < factors.size(); ++j) {
      if (used[j]) continue;
      if (factors[j] == want) {
        used[i] = used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) paired = false;
  }
  rep.factor_pairing = paired ? PairingVerdict::paired : PairingVerdict::not_paired;
  rep.obstructed = !rep.det_square || rep.factor_pairing == PairingVerdict::not_paired;
  return rep;
}

}  // namespace kirby
