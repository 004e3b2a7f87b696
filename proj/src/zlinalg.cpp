#include <kirby/zlinalg.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace kirby {

Int bareiss_determinant(const IntMat& m) {
  if (m.rows() != m.cols())
    throw input_error("determinant of non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;

  IntMat a = m;
  Int sign = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = checked_div(
            checked_sub(checked_mul(a(k, k), a(i, j)), checked_mul(a(i, k), a(k, j))),
            prev);
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

}  // namespace

BigMat to_big(const IntMat& m) {
  BigMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = BigInt(m(i, j));
  return r;
}

BigMat big_product(const BigMat& a, const BigMat& b) {
  if (a.cols() != b.rows()) throw input_error("big_product: shape mismatch");
  BigMat r(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      BigInt acc = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

bool big_equal(const BigMat& a, const BigMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

BigInt determinant_mod_p(const BigMat& m, const BigInt& p) {
  if (m.rows() != m.cols()) throw input_error("determinant of non-square matrix");
  const Eigen::Index n = m.rows();
  auto mod = [&p](BigInt x) {
    x %= p;
    if (x < 0) x += p;
    return x;
  };
  auto powmod = [&](BigInt base, BigInt e) {
    BigInt r = 1;
    base = mod(base);
    while (e > 0) {
      if ((e & 1) != 0) r = mod(r * base);
      base = mod(base * base);
      e >>= 1;
    }
    return r;
  };
  std::vector<std::vector<BigInt>> a(static_cast<size_t>(n),
                                     std::vector<BigInt>(static_cast<size_t>(n)));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[size_t(i)][size_t(j)] = mod(m(i, j));
  BigInt det = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (a[size_t(i)][size_t(k)] != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(a[size_t(piv)], a[size_t(k)]);
      det = mod(p - det);
    }
    det = mod(det * a[size_t(k)][size_t(k)]);
    BigInt inv = powmod(a[size_t(k)][size_t(k)], p - 2);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      BigInt f = mod(a[size_t(i)][size_t(k)] * inv);
      if (f == 0) continue;
      for (Eigen::Index j = k; j < n; ++j)
        a[size_t(i)][size_t(j)] = mod(a[size_t(i)][size_t(j)] - f * a[size_t(k)][size_t(j)]);
    }
  }
  return det;
}

SmithDecomposition smith_normal_form(const IntMat& m) {
  // Working arithmetic is arbitrary precision: integer elimination fills
  // in entries of minor-product size far beyond the inputs. Results are
  // range-checked back to 64 bits after the transforms are size-reduced.
  using Wide = boost::multiprecision::cpp_int;
  const Eigen::Index rows = m.rows(), cols = m.cols();

  auto wmul = [](const Wide& a, const Wide& b) { return Wide(a * b); };
  auto wadd = [](const Wide& a, const Wide& b) { return Wide(a + b); };

  using WRow = std::vector<Wide>;
  using WMat = std::vector<WRow>;
  auto identity = [](Eigen::Index n) {
    WMat w(static_cast<size_t>(n), WRow(static_cast<size_t>(n), 0));
    for (Eigen::Index i = 0; i < n; ++i) w[size_t(i)][size_t(i)] = 1;
    return w;
  };
  WMat d(static_cast<size_t>(rows), WRow(static_cast<size_t>(cols), 0));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) d[size_t(i)][size_t(j)] = m(i, j);
  WMat u = identity(rows), v = identity(cols);

  SmithDecomposition out;
  out.det_u = 1;
  out.det_v = 1;

  auto wabs = [](const Wide& x) { return Wide(x < 0 ? -x : x); };
  auto row_axpy = [&](WMat& w, size_t dst, size_t src, const Wide& f) {
    for (size_t j = 0; j < w[dst].size(); ++j)
      w[dst][j] = wadd(w[dst][j], wmul(f, w[src][j]));
  };
  auto row_combine = [&](WMat& w, size_t r1, size_t r2, const Wide& a11, const Wide& a12,
                         const Wide& a21, const Wide& a22) {
    for (size_t j = 0; j < w[r1].size(); ++j) {
      Wide x = w[r1][j], y = w[r2][j];
      w[r1][j] = wadd(wmul(a11, x), wmul(a12, y));
      w[r2][j] = wadd(wmul(a21, x), wmul(a22, y));
    }
  };
  auto col_axpy = [&](WMat& w, size_t dst, size_t src, const Wide& f) {
    for (size_t i = 0; i < w.size(); ++i)
      w[i][dst] = wadd(w[i][dst], wmul(f, w[i][src]));
  };
  auto col_combine = [&](WMat& w, size_t c1, size_t c2, const Wide& a11, const Wide& a12,
                         const Wide& a21, const Wide& a22) {
    for (size_t i = 0; i < w.size(); ++i) {
      Wide x = w[i][c1], y = w[i][c2];
      w[i][c1] = wadd(wmul(a11, x), wmul(a12, y));
      w[i][c2] = wadd(wmul(a21, x), wmul(a22, y));
    }
  };
  auto wextgcd = [](Wide a, Wide b, Wide& x, Wide& y) {
    Wide old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
    while (r != 0) {
      Wide q = old_r / r;
      Wide t = old_r - q * r; old_r = r; r = t;
      t = old_x - q * xx; old_x = xx; xx = t;
      t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x; y = old_y;
    return old_r;
  };

  auto isolated = [&](Eigen::Index t) {
    for (Eigen::Index i = t + 1; i < rows; ++i)
      if (d[size_t(i)][size_t(t)] != 0) return false;
    for (Eigen::Index j = t + 1; j < cols; ++j)
      if (d[size_t(t)][size_t(j)] != 0) return false;
    return true;
  };
  auto locate = [&](Eigen::Index t, Eigen::Index& pi, Eigen::Index& pj) {
    Wide best = 0;
    bool found = false;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j) {
        Wide val = wabs(d[size_t(i)][size_t(j)]);
        if (val != 0 && (!found || val < best)) { best = val; pi = i; pj = j; found = true; }
      }
    return found;
  };

  // phase 1: diagonalize, smallest pivot first
  const Eigen::Index steps = std::min(rows, cols);
  Eigen::Index rank = 0;
  for (Eigen::Index t = 0; t < steps; ++t) {
    Eigen::Index pi, pj;
    if (!locate(t, pi, pj)) break;
    rank = t + 1;
    if (pi != t) {
      std::swap(d[size_t(pi)], d[size_t(t)]);
      std::swap(u[size_t(pi)], u[size_t(t)]);
      out.det_u = -out.det_u;
    }
    if (pj != t) {
      for (auto& row : d) std::swap(row[size_t(pj)], row[size_t(t)]);
      for (auto& row : v) std::swap(row[size_t(pj)], row[size_t(t)]);
      out.det_v = -out.det_v;
    }
    while (!isolated(t)) {
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        Wide a = d[size_t(t)][size_t(t)], b = d[size_t(i)][size_t(t)];
        if (b == 0) continue;
        if (b % a == 0) {
          row_axpy(d, size_t(i), size_t(t), -(b / a));
          row_axpy(u, size_t(i), size_t(t), -(b / a));
        } else {
          Wide x, y;
          Wide g = wextgcd(a, b, x, y);
          row_combine(d, size_t(t), size_t(i), x, y, -(b / g), a / g);
          row_combine(u, size_t(t), size_t(i), x, y, -(b / g), a / g);
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        Wide a = d[size_t(t)][size_t(t)], b = d[size_t(t)][size_t(j)];
        if (b == 0) continue;
        if (b % a == 0) {
          col_axpy(d, size_t(j), size_t(t), -(b / a));
          col_axpy(v, size_t(j), size_t(t), -(b / a));
        } else {
          Wide x, y;
          Wide g = wextgcd(a, b, x, y);
          col_combine(d, size_t(t), size_t(j), x, y, -(b / g), a / g);
          col_combine(v, size_t(t), size_t(j), x, y, -(b / g), a / g);
        }
      }
    }
  }

  // phase 2: repair divisibility pairwise, diag(a, b) -> diag(gcd, +-lcm)
  for (Eigen::Index i = 0; i < rank; ++i)
    for (Eigen::Index j = i + 1; j < rank; ++j) {
      Wide a = d[size_t(i)][size_t(i)], b = d[size_t(j)][size_t(j)];
      if (b % a == 0) continue;
      Wide x, y;
      Wide g = wextgcd(a, b, x, y);
      row_combine(d, size_t(i), size_t(j), x, y, -(b / g), a / g);
      row_combine(u, size_t(i), size_t(j), x, y, -(b / g), a / g);
      col_axpy(d, size_t(i), size_t(j), 1);
      col_axpy(v, size_t(i), size_t(j), 1);
      Wide q = wmul(y, b) / g;
      col_axpy(d, size_t(j), size_t(i), -q);
      col_axpy(v, size_t(j), size_t(i), -q);
    }

  // phase 3: signs
  for (Eigen::Index t = 0; t < rank; ++t)
    if (d[size_t(t)][size_t(t)] < 0) {
      for (auto& e : d[size_t(t)]) e = -e;
      for (auto& e : u[size_t(t)]) e = -e;
      out.det_u = -out.det_u;
    }

  // phase 4: shrink the transforms without disturbing U*M*V = S.
  //  - rows of U (columns of V) beyond the rank pair with zero rows
  //    (columns) of S and act freely;
  //  - row_i += c*row_j legalizes against S when d_i | c*d_j, at the price
  //    of the compensating column move col_j -= c*(d_j/d_i)*col_i on V,
  //    and symmetrically for columns of V.
  // Lagrange-style size reduction over that stabilizer keeps entries at
  // lattice size.
  {
    auto dot_rows = [&](const WMat& w, size_t a, size_t b) {
      Wide acc = 0;
      for (size_t j = 0; j < w[a].size(); ++j) acc = wadd(acc, wmul(w[a][j], w[b][j]));
      return acc;
    };
    auto dot_cols = [&](const WMat& w, size_t a, size_t b) {
      Wide acc = 0;
      for (size_t i = 0; i < w.size(); ++i) acc = wadd(acc, wmul(w[i][a], w[i][b]));
      return acc;
    };
    auto nearest_quot = [](const Wide& num, const Wide& den) {
      // round(num/den) for den > 0
      Wide q = num / den, r = num % den;
      if (2 * r > den) ++q;
      if (2 * r < -den) --q;
      return q;
    };
    auto factor = [&](Eigen::Index t, Eigen::Index limit) {
      return t < rank && t < limit ? d[size_t(t)][size_t(t)] : Wide(0);
    };
    auto wgcd = [](Wide a, Wide b) {
      if (a < 0) a = -a;
      if (b < 0) b = -b;
      while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
      }
      return a;
    };

    for (int pass = 0; pass < 6; ++pass) {
      bool changed = false;

      // reduce row i of U by row j; legal step for c is d_i/gcd(d_i, d_j)
      for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < rows; ++j) {
          if (i == j) continue;
          Wide di = factor(i, rows), dj = factor(j, rows);
          if (dj == 0 && di != 0) continue;  // kernel rows cannot absorb others
          Wide step = 1;
          if (dj != 0) {
            if (di == 0) continue;  // handled by the dj == 0 case above
            step = di / wgcd(di, dj);
          }
          Wide n2 = dot_rows(u, size_t(j), size_t(j));
          if (n2 == 0) continue;
          Wide q = nearest_quot(dot_rows(u, size_t(i), size_t(j)), wmul(n2, step));
          q = wmul(q, step);
          if (q == 0) continue;
          row_axpy(u, size_t(i), size_t(j), -q);
          if (dj != 0) {
            // compensate on the V side; integrality is by the step choice
            Wide comp = wmul(q, dj) / di;
            col_axpy(v, size_t(j), size_t(i), comp);
          }
          changed = true;
        }

      // reduce column t of V by column s; legal step is d_t/gcd(d_t, d_s)
      for (Eigen::Index t = 0; t < cols; ++t)
        for (Eigen::Index s = 0; s < cols; ++s) {
          if (t == s) continue;
          Wide dt = factor(t, cols), ds = factor(s, cols);
          if (ds == 0 && dt != 0) continue;
          Wide step = 1;
          if (ds != 0) {
            if (dt == 0) continue;
            step = dt / wgcd(dt, ds);
          }
          Wide n2 = dot_cols(v, size_t(s), size_t(s));
          if (n2 == 0) continue;
          Wide q = nearest_quot(dot_cols(v, size_t(t), size_t(s)), wmul(n2, step));
          q = wmul(q, step);
          if (q == 0) continue;
          col_axpy(v, size_t(t), size_t(s), -q);
          if (ds != 0) {
            Wide comp = wmul(q, ds) / dt;
            row_axpy(u, size_t(s), size_t(t), comp);
          }
          changed = true;
        }

      if (!changed) break;
    }
  }

  const Wide lo(std::numeric_limits<Int>::min());
  const Wide hi(std::numeric_limits<Int>::max());
  out.s = IntMat(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (d[size_t(i)][size_t(j)] < lo || d[size_t(i)][size_t(j)] > hi)
        throw internal_error("smith_normal_form: invariant factor exceeds 64-bit range");
      out.s(i, j) = d[size_t(i)][size_t(j)].convert_to<Int>();
    }
  out.u = BigMat(rows, rows);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < rows; ++j) out.u(i, j) = u[size_t(i)][size_t(j)];
  out.v = BigMat(cols, cols);
  for (Eigen::Index i = 0; i < cols; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) out.v(i, j) = v[size_t(i)][size_t(j)];

  BigMat prod = big_product(big_product(out.u, to_big(m)), out.v);
  if (!big_equal(prod, to_big(out.s)))
    throw internal_error("smith_normal_form: U*M*V != S");
  for (Eigen::Index t = 0; t + 1 < rank; ++t)
    if (out.s(t + 1, t + 1) % out.s(t, t) != 0)
      throw internal_error("smith_normal_form: divisibility chain failed");
  return out;
}

IntMat kernel_basis(const IntMat& m) {
  SmithDecomposition snf = smith_normal_form(m);
  const Eigen::Index steps = std::min(m.rows(), m.cols());
  Eigen::Index rank = 0;
  for (Eigen::Index t = 0; t < steps; ++t)
    if (snf.s(t, t) != 0) ++rank;
  const Eigen::Index nullity = m.cols() - rank;
  const BigInt lo(std::numeric_limits<Int>::min()), hi(std::numeric_limits<Int>::max());
  IntMat basis(m.cols(), nullity);
  for (Eigen::Index j = 0; j < nullity; ++j)
    for (Eigen::Index i = 0; i < m.cols(); ++i) {
      const BigInt& e = snf.v(i, rank + j);
      if (e < lo || e > hi)
        throw internal_error("kernel basis exceeds 64-bit range");
      basis(i, j) = e.convert_to<Int>();
    }
  return basis;
}

namespace {

struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n) : num(n), den(1) {}
  Rational(Int n, Int d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw internal_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Int g = gcd_int(num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  bool zero() const { return num == 0; }
  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
};

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                  checked_mul(a.den, b.den));
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                  checked_mul(a.den, b.den));
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.zero()) throw internal_error("rational division by zero");
  return Rational(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

}  // namespace

Inertia exact_inertia(const IntMat& m) {
  if (m.rows() != m.cols())
    throw input_error("inertia of non-square matrix");
  if (m != m.transpose())
    throw input_error("inertia of non-symmetric matrix");
  const Eigen::Index n = m.rows();

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a[i][j] = Rational(m(i, j));

  Inertia res;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a[k][k].zero()) {
      // prefer a later nonzero diagonal entry (symmetric swap)
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (!a[i][i].zero()) { p = i; break; }
      if (p >= 0) {
        for (Eigen::Index j = 0; j < n; ++j) std::swap(a[k][j], a[p][j]);
        for (Eigen::Index i = 0; i < n; ++i) std::swap(a[i][k], a[i][p]);
      } else {
        // all-zero trailing diagonal: fold in a row with a(k,l) != 0,
        // making a(k,k) = 2*a(k,l) != 0; if none, the row is zero
        Eigen::Index l = -1;
        for (Eigen::Index j = k + 1; j < n; ++j)
          if (!a[k][j].zero()) { l = j; break; }
        if (l < 0) {
          ++res.zero;
          continue;
        }
        for (Eigen::Index j = 0; j < n; ++j) a[k][j] = a[k][j] + a[l][j];
        for (Eigen::Index i = 0; i < n; ++i) a[i][k] = a[i][k] + a[i][l];
      }
    }
    const Rational pivot = a[k][k];
    if (pivot.sign() > 0) ++res.positive; else ++res.negative;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a[i][k].zero()) continue;
      const Rational f = a[i][k] / pivot;
      for (Eigen::Index j = k + 1; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
    }
    // clear the pivot row/column only after every row has used it
    for (Eigen::Index i = k + 1; i < n; ++i) {
      a[i][k] = Rational(0);
      a[k][i] = Rational(0);
    }
  }
  return res;
}

Gf2Solution solve_mod2(const IntMat& m, const IntVec& rhs) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  if (rhs.size() != rows) throw input_error("solve_mod2: rhs length mismatch");

  std::vector<std::vector<int>> a(rows, std::vector<int>(cols + 1));
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) a[i][j] = int(((m(i, j) % 2) + 2) % 2);
    a[i][cols] = int(((rhs(i) % 2) + 2) % 2);
  }

  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a[i][c]) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != r && a[i][c])
        for (Eigen::Index j = c; j <= cols; ++j) a[i][j] ^= a[r][j];
    pivot_col.push_back(c);
    ++r;
  }

  Gf2Solution out;
  for (Eigen::Index i = r; i < rows; ++i)
    if (a[i][cols]) return out;  // inconsistent
  out.solvable = true;

  out.particular.assign(cols, 0);
  for (Eigen::Index i = 0; i < r; ++i)
    out.particular[pivot_col[i]] = a[i][cols];

  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index c : pivot_col) is_pivot[c] = true;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Int> k(cols, 0);
    k[c] = 1;
    for (Eigen::Index i = 0; i < r; ++i) k[pivot_col[i]] = a[i][c];
    out.kernel.push_back(std::move(k));
  }
  return out;
}

}  // namespace kirby
