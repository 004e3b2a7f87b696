#include <kirby/handles.hpp>

#include <algorithm>

namespace kirby {

HandleComplex::HandleComplex(std::vector<std::string> one_handles,
                             std::vector<TwoHandle> two_handles,
                             std::optional<IntMat> linking)
    : one_handles_(std::move(one_handles)),
      two_handles_(std::move(two_handles)),
      linking_(std::move(linking)) {
  for (size_t i = 0; i < one_handles_.size(); ++i)
    for (size_t j = i + 1; j < one_handles_.size(); ++j)
      if (one_handles_[i] == one_handles_[j])
        throw input_error("duplicate 1-handle name '" + one_handles_[i] + "'");
  for (const TwoHandle& h : two_handles_)
    for (const Letter& l : h.word) {
      if (l.second != 1 && l.second != -1)
        throw input_error("word exponents must be +-1");
      generator_index(l.first);  // throws on undeclared generators
    }
  if (linking_) {
    const Eigen::Index n = Eigen::Index(two_handles_.size());
    if (linking_->rows() != n || linking_->cols() != n)
      throw input_error("linking matrix dimension does not match 2-handle count");
    if (*linking_ != linking_->transpose())
      throw input_error("linking matrix must be symmetric");
  }
}

const IntMat& HandleComplex::linking() const {
  if (!linking_) throw input_error("handle complex carries no linking data");
  return *linking_;
}

int HandleComplex::generator_index(const std::string& name) const {
  for (size_t i = 0; i < one_handles_.size(); ++i)
    if (one_handles_[i] == name) return int(i);
  throw input_error("undeclared 1-handle '" + name + "' in attaching word");
}

Word free_reduce(Word w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GroupPresentation pi1_presentation(const HandleComplex& hc) {
  GroupPresentation p;
  p.generators = hc.one_handles();
  for (const TwoHandle& h : hc.two_handles())
    p.relators.push_back(free_reduce(h.word));
  return p;
}

IntMat boundary_matrix_2(const HandleComplex& hc) {
  const int rows = int(hc.one_handles().size());
  const int cols = int(hc.two_handles().size());
  IntMat m = IntMat::Zero(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (const Letter& l : hc.two_handles()[size_t(j)].word)
      m(hc.generator_index(l.first), j) += l.second;
  return m;
}

HomologySummary homology_summary(const HandleComplex& hc) {
  IntMat d2 = boundary_matrix_2(hc);
  SmithDecomposition snf = smith_normal_form(d2);

  HomologySummary out;
  const Eigen::Index steps = std::min(d2.rows(), d2.cols());
  int rank = 0;
  for (Eigen::Index t = 0; t < steps; ++t) {
    Int s = snf.s(t, t);
    if (s == 0) continue;
    ++rank;
    if (s >= 2) out.h1_invariant_factors.push_back(s);
  }
  out.h1_free_rank = int(d2.rows()) - rank;
  out.h2_rank = int(d2.cols()) - rank;

  out.h2_basis = kernel_basis(d2);
  if (out.h2_basis.cols() != out.h2_rank)
    throw internal_error("kernel basis rank mismatch");
  return out;
}

namespace {

IntMat framed_linking(const HandleComplex& hc) {
  const int n = int(hc.two_handles().size());
  IntMat q;
  if (hc.has_linking()) {
    q = hc.linking();
  } else {
    if (n > 1)
      throw input_error("linking matrix required for complexes with several 2-handles");
    q = IntMat::Zero(n, n);
  }
  for (int i = 0; i < n; ++i) q(i, i) = hc.two_handles()[size_t(i)].framing;
  return q;
}

}  // namespace

SymmetricForm intersection_form_of_complex(const HandleComplex& hc) {
  IntMat q = framed_linking(hc);
  if (hc.one_handles().empty()) return SymmetricForm(q);
  HomologySummary h = homology_summary(hc);
  IntMat restricted = h.h2_basis.transpose() * q * h.h2_basis;
  return SymmetricForm(restricted);
}

HandleComplex knot_trace(const FramedLink& fl) {
  if (fl.diagram.component_count() != 1)
    throw input_error("knot trace needs a single-component framed link");
  TwoHandle h;
  h.framing = fl.framings.at(0);
  IntMat linking = IntMat::Zero(1, 1);
  return HandleComplex({}, {h}, linking);
}

}  // namespace kirby
