#pragma once

#include <kirby/laurent.hpp>
#include <kirby/linkdiag.hpp>
#include <kirby/types.hpp>

#include <vector>

namespace kirby {

// Wirtinger data read off a knot diagram: one generator per arc, one
// conjugation relation per crossing, out = over^sign * in * over^-sign.
struct WirtingerRelation {
  int out_arc = 0;
  int over_arc = 0;  // incoming over-strand arc
  int in_arc = 0;
  int sign = 1;
};

struct WirtingerData {
  int generator_count = 0;
  std::vector<WirtingerRelation> relations;
};

WirtingerData wirtinger_presentation(const OrientedLinkDiagram& d);

// Fraction-free determinant of a Laurent-polynomial matrix.
LaurentPoly laurent_determinant(std::vector<std::vector<LaurentPoly>> m);

// Normalized Alexander polynomial: symmetric under t -> 1/t with value 1
// at t = 1. Throws internal_error when the diagram violates the knot
// contracts (Delta(1) != +-1 or an asymmetric minor determinant).
LaurentPoly alexander_polynomial(const OrientedLinkDiagram& d);

Int knot_determinant(const LaurentPoly& delta);

// Irreducible integer-polynomial factors by Kronecker interpolation.
// Input must have exponents >= 0 and degree <= 12. A leading unit or
// content != 1 is returned as a constant factor; the product of the
// returned factors reconstructs the input exactly.
std::vector<LaurentPoly> kronecker_factor(const LaurentPoly& p);

enum class PairingVerdict { paired, not_paired, inconclusive };

struct FoxMilnorReport {
  Int determinant = 0;
  bool det_square = false;
  PairingVerdict factor_pairing = PairingVerdict::inconclusive;
  bool obstructed = false;  // a failed check proves the knot is not slice
};

FoxMilnorReport fox_milnor_test(const LaurentPoly& delta);

}  // namespace kirby
