#pragma once

#include <kirby/types.hpp>
#include <kirby/zlinalg.hpp>

#include <optional>
#include <string>
#include <vector>

namespace kirby {

// Symmetric bilinear form on Z^n, held as its Gram matrix.
class SymmetricForm {
 public:
  SymmetricForm() : m_(0, 0) {}
  explicit SymmetricForm(IntMat m);

  int rank() const { return int(m_.rows()); }
  const IntMat& matrix() const { return m_; }
  Int operator()(int i, int j) const { return m_(i, j); }

  // Q(x, y) = x^T Q y
  Int pair(const IntVec& x, const IntVec& y) const;

 private:
  IntMat m_;
};

enum class Definiteness { positive_definite, negative_definite, indefinite, degenerate };

struct FormInvariants {
  int rank = 0;
  Int det = 1;
  int b_plus = 0;
  int b_minus = 0;
  int b_zero = 0;
  int signature = 0;
  bool even = false;
  bool unimodular = false;
  bool nondegenerate = false;
  Definiteness definiteness = Definiteness::positive_definite;
};

FormInvariants form_invariants(const SymmetricForm& q);

std::string definiteness_name(Definiteness d);

// true iff A is unimodular and A^T Q A == Q2 entrywise
bool verify_congruence(const SymmetricForm& q, const SymmetricForm& q2, const IntMat& a);

struct SlideResult {
  SymmetricForm form;
  IntMat basis_change;  // the elementary matrix used
};

// Adds eps * (handle i) to handle j: A = I with A(i,j) = eps, Q -> A^T Q A.
// Indices are 0-based.
SlideResult handle_slide(const SymmetricForm& q, int i, int j, int eps);

enum class BlowDirection { up, down };

// up: Q (+) <sign>. down: delete index k, whose row must be sign*e_k.
SymmetricForm blow(const SymmetricForm& q, BlowDirection dir, int sign, int k = -1);

struct ObstructionReport {
  int sigma_mod_8 = 0;
  int sigma_mod_16 = 0;
  bool algebraic_ok = true;     // even unimodular => sigma = 0 mod 8
  bool rohlin_smooth_ok = true; // even => sigma = 0 mod 16
  std::optional<int> mu;        // (sigma/8) mod 2, even unimodular forms only
};

ObstructionReport obstruction_report(const SymmetricForm& q);

struct CharacteristicReport {
  std::optional<bool> is_characteristic;  // present when a vector was supplied
  std::optional<bool> km_ok;              // Q(v,v) = 0 mod 16
  std::vector<Int> solution;              // a characteristic vector, entries 0/1
  std::vector<std::vector<Int>> kernel_mod2;
};

CharacteristicReport characteristic_report(const SymmetricForm& q,
                                           std::optional<IntVec> v = std::nullopt);

struct IndefiniteLabel {
  bool even = false;
  Int positives = 0;  // odd type: p in p<1> + q<-1>
  Int negatives = 0;
  Int hyperbolics = 0;  // even type: a in aH + bE8
  Int e8s = 0;          // signed
  std::string text;     // e.g. "1<1> + 1<-1>" or "1H + 0E8"
};

IndefiniteLabel classify_indefinite_unimodular(const SymmetricForm& q);

// Recognizes a definite even unimodular rank-8 form as +-E8 from its
// invariants (rank 8, |det| 1, even, sigma = +-8); uniqueness of E8 is
// standard. Returns "E8" or "-E8", nothing otherwise.
std::optional<std::string> recognize_definite_e8(const SymmetricForm& q);

// Gram matrix of the saturated sublattice {x : Q(x, v) = 0}.
SymmetricForm orthogonal_complement(const SymmetricForm& q, const IntVec& v);

SymmetricForm standard_e8();
SymmetricForm standard_hyperbolic();
SymmetricForm diagonal_form(const std::vector<Int>& entries);

// Scripted matrix-level Kirby moves. Slides accumulate a basis change that
// is verified against the segment's start form; blow moves change rank and
// start a new segment.
struct MoveSegment {
  SymmetricForm start;
  SymmetricForm end;
  IntMat basis_change;
  bool verified = false;
};

struct Move {
  enum class Kind { slide, blow } kind = Kind::slide;
  int i = 0, j = 0, eps = 1;         // slide
  BlowDirection dir = BlowDirection::up;
  int sign = 1, k = -1;              // blow
};

struct MovesResult {
  SymmetricForm final_form;
  std::vector<MoveSegment> segments;
};

MovesResult apply_moves(const SymmetricForm& q, const std::vector<Move>& script);

}  // namespace kirby
