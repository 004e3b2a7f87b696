#pragma once

#include <kirby/forms.hpp>
#include <kirby/linkdiag.hpp>
#include <kirby/types.hpp>
#include <kirby/zlinalg.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kirby {

// A letter of an attaching word: generator name with exponent +-1.
using Letter = std::pair<std::string, int>;
using Word = std::vector<Letter>;

struct TwoHandle {
  Word word;
  Int framing = 0;
};

// Combinatorial handle decomposition: one implicit 0-handle, named
// 1-handles, 2-handles with attaching words and framings, and pairwise
// linking numbers between the 2-handles (diagonal entries are ignored in
// favor of the framings).
class HandleComplex {
 public:
  HandleComplex(std::vector<std::string> one_handles, std::vector<TwoHandle> two_handles,
                std::optional<IntMat> linking = std::nullopt);

  const std::vector<std::string>& one_handles() const { return one_handles_; }
  const std::vector<TwoHandle>& two_handles() const { return two_handles_; }
  bool has_linking() const { return linking_.has_value(); }
  const IntMat& linking() const;

  int generator_index(const std::string& name) const;

 private:
  std::vector<std::string> one_handles_;
  std::vector<TwoHandle> two_handles_;
  std::optional<IntMat> linking_;
};

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // freely reduced
};

struct HomologySummary {
  std::vector<Int> h1_invariant_factors;  // entries >= 2, divisibility chain
  int h1_free_rank = 0;
  int h2_rank = 0;
  IntMat h2_basis;  // columns span the saturated kernel of boundary_matrix_2
};

Word free_reduce(Word w);

GroupPresentation pi1_presentation(const HandleComplex& hc);

// rows = 1-handles, columns = 2-handles, entries = exponent sums
IntMat boundary_matrix_2(const HandleComplex& hc);

HomologySummary homology_summary(const HandleComplex& hc);

// No 1-handles: the linking matrix with framing diagonal. Otherwise the
// restriction B^T Q B to the saturated kernel basis B of the boundary map.
SymmetricForm intersection_form_of_complex(const HandleComplex& hc);

// The n-trace of a knot: one framed 2-handle on an empty word.
HandleComplex knot_trace(const FramedLink& fl);

}  // namespace kirby
