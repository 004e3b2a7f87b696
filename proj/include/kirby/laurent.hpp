#pragma once

#include <kirby/types.hpp>

#include <map>
#include <string>

namespace kirby {

// Integer Laurent polynomial in one variable t. Coefficients are stored
// sparsely by exponent; zero coefficients are never kept.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Int constant);
  static LaurentPoly monomial(Int coeff, Int exponent);

  const std::map<Int, Int>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(Int exponent) const;
  Int min_exponent() const;  // throws on zero polynomial
  Int max_exponent() const;
  Int degree_span() const { return max_exponent() - min_exponent(); }
  Int leading_coeff() const { return coeff(max_exponent()); }

  Int evaluate(Int t) const;        // exact evaluation at an integer
  LaurentPoly reciprocal() const;   // t -> 1/t
  LaurentPoly shifted(Int k) const; // multiply by t^k

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Exact division; throws internal_error if the quotient is not an
  // integer Laurent polynomial (Bareiss relies on exactness).
  friend LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

  std::string str() const;  // e.g. "t^2 - 2t + 1 - 2t^-1 + t^-2"

 private:
  void set(Int exponent, Int coeff);
  std::map<Int, Int> coeffs_;
};

}  // namespace kirby
