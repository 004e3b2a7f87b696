#include <kirby/forms.hpp>

#include <sstream>

namespace kirby {

SymmetricForm::SymmetricForm(IntMat m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw input_error("form matrix must be square");
  if (m_ != m_.transpose()) throw input_error("form matrix must be symmetric");
}

Int SymmetricForm::pair(const IntVec& x, const IntVec& y) const {
  if (x.size() != m_.rows() || y.size() != m_.rows())
    throw input_error("vector length does not match form rank");
  Int acc = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      acc = checked_add(acc, checked_mul(x(i), checked_mul(m_(i, j), y(j))));
  return acc;
}

FormInvariants form_invariants(const SymmetricForm& q) {
  FormInvariants inv;
  inv.rank = q.rank();
  inv.det = bareiss_determinant(q.matrix());
  Inertia in = exact_inertia(q.matrix());
  inv.b_plus = in.positive;
  inv.b_minus = in.negative;
  inv.b_zero = in.zero;
  inv.signature = in.positive - in.negative;
  inv.even = true;
  for (int i = 0; i < q.rank(); ++i)
    if (q(i, i) % 2 != 0) { inv.even = false; break; }
  inv.unimodular = inv.det == 1 || inv.det == -1;
  inv.nondegenerate = inv.det != 0;
  if (inv.b_zero > 0)
    inv.definiteness = Definiteness::degenerate;
  else if (inv.b_minus == 0)
    inv.definiteness = Definiteness::positive_definite;
  else if (inv.b_plus == 0)
    inv.definiteness = Definiteness::negative_definite;
  else
    inv.definiteness = Definiteness::indefinite;
  return inv;
}

std::string definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::positive_definite: return "positive-definite";
    case Definiteness::negative_definite: return "negative-definite";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::degenerate: return "degenerate";
  }
  return "";
}

bool verify_congruence(const SymmetricForm& q, const SymmetricForm& q2, const IntMat& a) {
  if (a.rows() != q.rank() || a.cols() != q.rank())
    throw input_error("basis change has wrong dimensions");
  Int det = bareiss_determinant(a);
  if (det != 1 && det != -1)
    throw input_error("basis change is not unimodular (det " + std::to_string(det) + ")");
  if (q2.rank() != q.rank()) return false;
  IntMat lhs = a.transpose() * q.matrix() * a;
  return lhs == q2.matrix();
}

SlideResult handle_slide(const SymmetricForm& q, int i, int j, int eps) {
  if (i == j) throw input_error("handle slide needs two distinct handles");
  if (i < 0 || j < 0 || i >= q.rank() || j >= q.rank())
    throw input_error("handle index out of range");
  if (eps != 1 && eps != -1) throw input_error("slide sign must be +-1");
  IntMat a = IntMat::Identity(q.rank(), q.rank());
  a(i, j) = eps;  // column j += eps * column i
  SlideResult r;
  r.basis_change = a;
  r.form = SymmetricForm(a.transpose() * q.matrix() * a);
  return r;
}

SymmetricForm blow(const SymmetricForm& q, BlowDirection dir, int sign, int k) {
  if (sign != 1 && sign != -1) throw input_error("blow sign must be +-1");
  const int n = q.rank();
  if (dir == BlowDirection::up) {
    IntMat m = IntMat::Zero(n + 1, n + 1);
    m.topLeftCorner(n, n) = q.matrix();
    m(n, n) = sign;
    return SymmetricForm(m);
  }
  if (k < 0 || k >= n) throw input_error("blow-down index out of range");
  if (q(k, k) != sign)
    throw input_error("blow-down needs diagonal entry equal to the requested sign");
  for (int j = 0; j < n; ++j)
    if (j != k && q(k, j) != 0)
      throw input_error("blow-down row is not cleared; slide handles first");
  IntMat m(n - 1, n - 1);
  for (int i = 0, ii = 0; i < n; ++i) {
    if (i == k) continue;
    for (int j = 0, jj = 0; j < n; ++j) {
      if (j == k) continue;
      m(ii, jj) = q(i, j);
      ++jj;
    }
    ++ii;
  }
  return SymmetricForm(m);
}

ObstructionReport obstruction_report(const SymmetricForm& q) {
  FormInvariants inv = form_invariants(q);
  ObstructionReport r;
  r.sigma_mod_8 = int(((inv.signature % 8) + 8) % 8);
  r.sigma_mod_16 = int(((inv.signature % 16) + 16) % 16);
  r.algebraic_ok = !(inv.even && inv.unimodular) || r.sigma_mod_8 == 0;
  r.rohlin_smooth_ok = !inv.even || r.sigma_mod_16 == 0;
  if (inv.even && inv.unimodular) {
    if (inv.signature % 8 != 0)
      throw internal_error("even unimodular form with signature not divisible by 8");
    r.mu = int((((inv.signature / 8) % 2) + 2) % 2);
  }
  return r;
}

CharacteristicReport characteristic_report(const SymmetricForm& q, std::optional<IntVec> v) {
  const int n = q.rank();
  IntVec diag(n);
  for (int i = 0; i < n; ++i) diag(i) = q(i, i);

  Gf2Solution sol = solve_mod2(q.matrix(), diag);
  if (!sol.solvable)
    throw internal_error("characteristic congruence unsolvable; symmetric forms always admit one");

  CharacteristicReport r;
  r.solution = sol.particular;
  r.kernel_mod2 = sol.kernel;
  if (v) {
    if (v->size() != n) throw input_error("characteristic vector has wrong length");
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      Int row = 0;
      for (int j = 0; j < n; ++j) row = checked_add(row, checked_mul(q(i, j), (*v)(j)));
      if (((row - diag(i)) % 2 + 2) % 2 != 0) { ok = false; break; }
    }
    r.is_characteristic = ok;
    Int self = q.pair(*v, *v);
    r.km_ok = ((self % 16) + 16) % 16 == 0;
  }
  return r;
}

IndefiniteLabel classify_indefinite_unimodular(const SymmetricForm& q) {
  FormInvariants inv = form_invariants(q);
  if (!inv.unimodular)
    throw input_error("classification needs a unimodular form");
  if (inv.definiteness != Definiteness::indefinite)
    throw input_error("classification needs an indefinite form");

  IndefiniteLabel label;
  std::ostringstream os;
  if (!inv.even) {
    label.even = false;
    label.positives = inv.b_plus;
    label.negatives = inv.b_minus;
    os << label.positives << "<1> + " << label.negatives << "<-1>";
  } else {
    label.even = true;
    label.e8s = inv.signature / 8;
    label.hyperbolics = std::min(inv.b_plus, inv.b_minus);
    os << label.hyperbolics << "H + " << label.e8s << "E8";
  }
  label.text = os.str();
  return label;
}

std::optional<std::string> recognize_definite_e8(const SymmetricForm& q) {
  FormInvariants inv = form_invariants(q);
  if (inv.rank != 8 || !inv.even || !inv.unimodular) return std::nullopt;
  if (inv.signature == 8) return "E8";
  if (inv.signature == -8) return "-E8";
  return std::nullopt;
}

SymmetricForm orthogonal_complement(const SymmetricForm& q, const IntVec& v) {
  if (v.size() != q.rank()) throw input_error("vector length does not match form rank");
  if (v.isZero()) throw input_error("orthogonal complement of the zero vector");
  IntMat w = (q.matrix() * v).transpose();  // 1 x n functional x -> Q(v, x)
  IntMat basis = kernel_basis(w);
  IntMat gram = basis.transpose() * q.matrix() * basis;
  return SymmetricForm(gram);
}

SymmetricForm standard_e8() {
  IntMat m(8, 8);
  m << 2, 1, 0, 0, 0, 0, 0, 0,
       1, 2, 1, 0, 0, 0, 0, 0,
       0, 1, 2, 1, 0, 0, 0, 0,
       0, 0, 1, 2, 1, 0, 0, 0,
       0, 0, 0, 1, 2, 1, 0, 1,
       0, 0, 0, 0, 1, 2, 1, 0,
       0, 0, 0, 0, 0, 1, 2, 0,
       0, 0, 0, 0, 1, 0, 0, 2;
  return SymmetricForm(m);
}

SymmetricForm standard_hyperbolic() {
  IntMat m(2, 2);
  m << 0, 1, 1, 0;
  return SymmetricForm(m);
}

SymmetricForm diagonal_form(const std::vector<Int>& entries) {
  IntMat m = IntMat::Zero(Eigen::Index(entries.size()), Eigen::Index(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) m(Eigen::Index(i), Eigen::Index(i)) = entries[i];
  return SymmetricForm(m);
}

MovesResult apply_moves(const SymmetricForm& q, const std::vector<Move>& script) {
  MovesResult out;
  SymmetricForm current = q;
  MoveSegment seg;
  seg.start = current;
  seg.basis_change = IntMat::Identity(current.rank(), current.rank());

  auto close_segment = [&]() {
    seg.end = current;
    seg.verified = verify_congruence(seg.start, seg.end, seg.basis_change);
    if (!seg.verified)
      throw internal_error("recorded basis change fails congruence verification");
    out.segments.push_back(seg);
  };

  for (const Move& mv : script) {
    if (mv.kind == Move::Kind::slide) {
      SlideResult r = handle_slide(current, mv.i, mv.j, mv.eps);
      seg.basis_change = seg.basis_change * r.basis_change;
      current = r.form;
    } else {
      close_segment();
      current = blow(current, mv.dir, mv.sign, mv.k);
      seg = MoveSegment{};
      seg.start = current;
      seg.basis_change = IntMat::Identity(current.rank(), current.rank());
    }
  }
  close_segment();
  out.final_form = current;
  return out;
}

}  // namespace kirby
