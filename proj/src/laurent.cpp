#include <kirby/laurent.hpp>

#include <sstream>

namespace kirby {

LaurentPoly::LaurentPoly(Int constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(Int coeff, Int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exponent] = coeff;
  return p;
}

Int LaurentPoly::coeff(Int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

Int LaurentPoly::min_exponent() const {
  if (is_zero()) throw internal_error("min_exponent of zero polynomial");
  return coeffs_.begin()->first;
}

Int LaurentPoly::max_exponent() const {
  if (is_zero()) throw internal_error("max_exponent of zero polynomial");
  return coeffs_.rbegin()->first;
}

Int LaurentPoly::evaluate(Int t) const {
  Int acc = 0;
  for (const auto& [e, c] : coeffs_) {
    if (e >= 0) {
      Int term = c;
      for (Int k = 0; k < e; ++k) term = checked_mul(term, t);
      acc = checked_add(acc, term);
    } else {
      // negative exponents only evaluate exactly at t = +-1
      if (t != 1 && t != -1)
        throw input_error("Laurent evaluation with negative exponents needs t = +-1");
      acc = checked_add(acc, (t == -1 && (e % 2) != 0) ? -c : c);
    }
  }
  return acc;
}

LaurentPoly LaurentPoly::reciprocal() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::shifted(Int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

void LaurentPoly::set(Int exponent, Int coeff) {
  if (coeff == 0)
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = coeff;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, checked_add(coeff(e), c));
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, checked_sub(coeff(e), c));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_)
      r.set(ea + eb, checked_add(r.coeff(ea + eb), checked_mul(ca, cb)));
  return r;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw internal_error("Laurent division by zero");
  if (num.is_zero()) return LaurentPoly();

  // any exact quotient has exponents >= num.min - den.min
  const Int emin = num.min_exponent() - den.min_exponent();
  const Int dmax = den.max_exponent();
  const Int dlead = den.coeff(dmax);

  LaurentPoly rem = num;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    Int e = rem.max_exponent() - dmax;
    Int c = rem.coeff(rem.max_exponent());
    if (e < emin || c % dlead != 0)
      throw internal_error("inexact Laurent division");
    LaurentPoly term = LaurentPoly::monomial(c / dlead, e);
    quot += term;
    rem -= term * den;
  }
  return quot;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Int e = it->first, c = it->second;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int ac = std::abs(c);
    if (e == 0) {
      os << ac;
    } else {
      if (ac != 1) os << ac;
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace kirby
