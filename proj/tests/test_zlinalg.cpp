#include <doctest.h>

#include <kirby/zlinalg.hpp>

#include <Eigen/Eigenvalues>
#include <random>

using namespace kirby;

namespace {

IntMat mat(std::initializer_list<std::initializer_list<Int>> rows) {
  IntMat m(Eigen::Index(rows.size()), Eigen::Index(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (Int v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("bareiss determinant on known matrices") {
  CHECK(bareiss_determinant(IntMat(0, 0)) == 1);
  CHECK(bareiss_determinant(mat({{2}})) == 2);
  CHECK(bareiss_determinant(mat({{6, 2, 0}, {2, 0, 0}, {0, 0, -1}})) == 4);
  CHECK(bareiss_determinant(mat({{0, 1}, {1, 0}})) == -1);
  CHECK(bareiss_determinant(mat({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("bareiss matches cofactor expansion on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + int(rng() % 4);
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = entry(rng);

    // cofactor expansion oracle
    std::function<Int(const IntMat&)> cof = [&](const IntMat& a) -> Int {
      if (a.rows() == 1) return a(0, 0);
      Int acc = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        IntMat sub(a.rows() - 1, a.cols() - 1);
        for (Eigen::Index i = 1; i < a.rows(); ++i) {
          Eigen::Index jj = 0;
          for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (j == k) continue;
            sub(i - 1, jj++) = a(i, j);
          }
        }
        Int term = a(0, k) * cof(sub);
        acc += (k % 2 == 0) ? term : -term;
      }
      return acc;
    };
    CHECK(bareiss_determinant(m) == cof(m));
  }
}

TEST_CASE("smith normal form on pinned examples") {
  SmithDecomposition s1 = smith_normal_form(mat({{2}}));
  CHECK(s1.s(0, 0) == 2);

  SmithDecomposition s2 = smith_normal_form(mat({{2, 0}, {0, 3}}));
  CHECK(s2.s(0, 0) == 1);
  CHECK(s2.s(1, 1) == 6);

  IntMat z = IntMat::Zero(3, 2);
  SmithDecomposition s3 = smith_normal_form(z);
  CHECK(s3.s == z);
}

TEST_CASE("smith normal form contracts on random matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<Int> entry(-20, 20);
  for (int trial = 0; trial < 300; ++trial) {
    int r = 1 + int(rng() % 8), c = 1 + int(rng() % 8);
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = entry(rng);

    SmithDecomposition snf = smith_normal_form(m);
    BigMat prod = big_product(big_product(snf.u, to_big(m)), snf.v);
    CHECK(big_equal(prod, to_big(snf.s)));
    CHECK(std::abs(snf.det_u) == 1);
    CHECK(std::abs(snf.det_v) == 1);
    // independent unimodularity check: determinants over two prime fields
    for (Int p : {Int(2147483647), Int(2147483629)}) {
      BigInt du = determinant_mod_p(snf.u, p);
      BigInt dv = determinant_mod_p(snf.v, p);
      CHECK((du == 1 || du == p - 1));
      CHECK((dv == 1 || dv == p - 1));
      CHECK(du == ((snf.det_u == 1) ? BigInt(1) : BigInt(p - 1)));
      CHECK(dv == ((snf.det_v == 1) ? BigInt(1) : BigInt(p - 1)));
    }

    Int prev = -1;
    for (Eigen::Index t = 0; t < std::min(snf.s.rows(), snf.s.cols()); ++t) {
      Int d = snf.s(t, t);
      CHECK(d >= 0);
      if (prev > 0) CHECK((d == 0 || d % prev == 0));
      if (prev == 0) CHECK(d == 0);
      prev = d;
    }
    for (Eigen::Index i = 0; i < snf.s.rows(); ++i)
      for (Eigen::Index j = 0; j < snf.s.cols(); ++j)
        if (i != j) CHECK(snf.s(i, j) == 0);

    if (r == c) {
      Int prod = 1;
      for (Eigen::Index t = 0; t < r; ++t) prod *= snf.s(t, t);
      CHECK(std::abs(prod) == std::abs(bareiss_determinant(m)));
    }
  }
}

TEST_CASE("kernel basis spans the saturated kernel") {
  IntMat m = mat({{3, 1, 1, 1, 1, 1, 1, 1, 1}});  // the functional <v, .> for v=(3,1^8) in diag(1,-1^8)
  IntMat k = kernel_basis(m);
  CHECK(k.cols() == 8);
  CHECK((m * k).isZero());

  // saturation: the SNF of the basis has all invariant factors 1
  SmithDecomposition snf = smith_normal_form(k);
  for (Eigen::Index t = 0; t < std::min(snf.s.rows(), snf.s.cols()); ++t)
    CHECK(snf.s(t, t) == 1);
}

TEST_CASE("exact inertia on pinned forms") {
  Inertia h = exact_inertia(mat({{0, 1}, {1, 0}}));
  CHECK(h.positive == 1);
  CHECK(h.negative == 1);
  CHECK(h.zero == 0);

  Inertia d = exact_inertia(mat({{6, 2, 0}, {2, 0, 0}, {0, 0, -1}}));
  CHECK(d.positive == 1);
  CHECK(d.negative == 2);
  CHECK(d.zero == 0);

  Inertia z = exact_inertia(IntMat::Zero(3, 3));
  CHECK(z.zero == 3);

  Inertia deg = exact_inertia(mat({{1, 2}, {2, 4}}));
  CHECK(deg.positive == 1);
  CHECK(deg.zero == 1);
}

TEST_CASE("exact inertia agrees with floating-point eigenvalues outside a guard band") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<Int> entry(-9, 9);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + int(rng() % 6);
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        m(i, j) = entry(rng);
        m(j, i) = m(i, j);
      }
    Eigen::MatrixXd md = m.cast<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(md);
    bool in_band = false;
    int pos = 0, neg = 0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      double ev = es.eigenvalues()(k);
      if (std::abs(ev) <= 1e-6) { in_band = true; break; }
      (ev > 0 ? pos : neg)++;
    }
    if (in_band) continue;
    ++compared;
    Inertia in = exact_inertia(m);
    CHECK(in.positive == pos);
    CHECK(in.negative == neg);
    CHECK(in.zero == 0);
  }
  CHECK(compared > 200);  // the guard band should only drop a minority
}

TEST_CASE("solve_mod2 finds particular solutions and kernels") {
  IntMat m = mat({{1, 1}, {1, 1}});
  IntVec rhs(2);
  rhs << 1, 1;
  Gf2Solution s = solve_mod2(m, rhs);
  REQUIRE(s.solvable);
  CHECK((s.particular[0] + s.particular[1]) % 2 == 1);
  CHECK(s.kernel.size() == 1);

  rhs << 1, 0;
  CHECK_FALSE(solve_mod2(m, rhs).solvable);
}
