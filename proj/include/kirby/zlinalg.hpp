#pragma once

#include <kirby/types.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <vector>

namespace kirby {

// Exact integer determinant by fraction-free (Bareiss) elimination.
Int bareiss_determinant(const IntMat& m);

// Integer elimination fills in entries of minor-product size, far beyond
// the inputs, so the recorded transforms live in arbitrary precision. The
// invariant factors themselves always fit 64 bits at this scale.
using BigInt = boost::multiprecision::cpp_int;
using BigMat = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

struct SmithDecomposition {
  IntMat s;  // diagonal, nonnegative, divisibility chain along the diagonal
  BigMat u;  // unimodular, rows
  BigMat v;  // unimodular, cols
  Int det_u = 1;  // +-1, tracked across the row operations
  Int det_v = 1;
  // invariant: u * input * v == s, |det u| == |det v| == 1
};

// BigMat is used as plain storage; these helpers supply the arithmetic
// (the image's boost version trips over Eigen's operator machinery).
BigMat to_big(const IntMat& m);
BigMat big_product(const BigMat& a, const BigMat& b);
bool big_equal(const BigMat& a, const BigMat& b);

// Determinant modulo a prime, by Gaussian elimination over GF(p); useful
// as an overflow-free cross-check on large-entry matrices.
BigInt determinant_mod_p(const BigMat& m, const BigInt& p);

// Smith normal form with recorded unimodular row/column operations.
// Pivot selection is by least absolute value; the identity U*M*V = S is
// re-checked before returning.
SmithDecomposition smith_normal_form(const IntMat& m);

// Columns form a basis of the saturated kernel {x : m x = 0}.
IntMat kernel_basis(const IntMat& m);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Sylvester inertia of a symmetric integer matrix by exact congruence
// diagonalization over the rationals. A zero diagonal with a nonzero
// off-diagonal entry b is handled by folding the partner row in, which
// turns the 2x2 block [[0,b],[b,d]] into a (+1,-1) contribution.
Inertia exact_inertia(const IntMat& m);

// Solves m x = rhs over GF(2). Returns a particular 0/1 solution and a
// basis of the mod-2 kernel; empty optional-like flag when unsolvable.
struct Gf2Solution {
  bool solvable = false;
  std::vector<Int> particular;           // entries in {0,1}
  std::vector<std::vector<Int>> kernel;  // each entry in {0,1}
};
Gf2Solution solve_mod2(const IntMat& m, const IntVec& rhs);

}  // namespace kirby
