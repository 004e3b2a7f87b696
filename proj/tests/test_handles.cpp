#include <doctest.h>

#include <kirby/handles.hpp>

#include <random>

using namespace kirby;

namespace {

Word word(std::initializer_list<std::pair<const char*, int>> letters) {
  Word w;
  for (auto& [g, e] : letters) w.push_back({g, e});
  return w;
}

// the four running-example complexes
HandleComplex fig_a(Int framing = 0) {
  return HandleComplex({"x"}, {TwoHandle{word({{"x", 1}, {"x", 1}}), framing}});
}
HandleComplex fig_b() {
  return HandleComplex({"x", "y"},
                       {TwoHandle{word({{"x", 1}, {"y", 1}, {"x", -1}, {"y", -1}}), 0}});
}
HandleComplex fig_c(Int framing = 0) {
  return HandleComplex({"x"}, {TwoHandle{word({{"x", 1}, {"x", -1}}), framing}});
}
HandleComplex fig_d() {
  return HandleComplex({"x"}, {TwoHandle{word({{"x", 1}, {"x", -1}, {"x", 1}}), 0}});
}

}  // namespace

TEST_CASE("pi1 presentations read the attaching words") {
  GroupPresentation a = pi1_presentation(fig_a());
  CHECK(a.generators == std::vector<std::string>{"x"});
  REQUIRE(a.relators.size() == 1);
  CHECK(a.relators[0] == word({{"x", 1}, {"x", 1}}));

  GroupPresentation b = pi1_presentation(fig_b());
  CHECK(b.generators.size() == 2);
  CHECK(b.relators[0].size() == 4);

  // x x^-1 freely reduces to the empty relator
  GroupPresentation c = pi1_presentation(fig_c());
  CHECK(c.relators[0].empty());

  GroupPresentation d = pi1_presentation(fig_d());
  CHECK(d.relators[0] == word({{"x", 1}}));

  CHECK_THROWS_AS(HandleComplex({"x"}, {TwoHandle{word({{"y", 1}}), 0}}), input_error);
}

TEST_CASE("boundary matrices are exponent sums") {
  CHECK(boundary_matrix_2(fig_a())(0, 0) == 2);
  IntMat b = boundary_matrix_2(fig_b());
  CHECK(b(0, 0) == 0);
  CHECK(b(1, 0) == 0);
  CHECK(boundary_matrix_2(fig_c())(0, 0) == 0);
  CHECK(boundary_matrix_2(fig_d())(0, 0) == 1);

  // abelianization consistency: exponent sums of the presentation match
  GroupPresentation p = pi1_presentation(fig_d());
  Int sum = 0;
  for (const Letter& l : p.relators[0]) sum += l.second;
  CHECK(sum == boundary_matrix_2(fig_d())(0, 0));
}

TEST_CASE("homology of the four running examples") {
  HomologySummary a = homology_summary(fig_a());
  CHECK(a.h1_invariant_factors == std::vector<Int>{2});
  CHECK(a.h1_free_rank == 0);
  CHECK(a.h2_rank == 0);

  HomologySummary b = homology_summary(fig_b());
  CHECK(b.h1_invariant_factors.empty());
  CHECK(b.h1_free_rank == 2);
  CHECK(b.h2_rank == 1);

  HomologySummary c = homology_summary(fig_c());
  CHECK(c.h1_invariant_factors.empty());
  CHECK(c.h1_free_rank == 1);
  CHECK(c.h2_rank == 1);

  HomologySummary d = homology_summary(fig_d());
  CHECK(d.h1_invariant_factors.empty());
  CHECK(d.h1_free_rank == 0);
  CHECK(d.h2_rank == 0);
}

TEST_CASE("h2 rank plus boundary rank counts the 2-handles") {
  std::mt19937 rng(23);
  std::vector<std::string> gens{"a", "b", "c"};
  for (int trial = 0; trial < 40; ++trial) {
    int two = 1 + int(rng() % 3);
    std::vector<TwoHandle> handles;
    for (int h = 0; h < two; ++h) {
      TwoHandle th;
      int len = int(rng() % 5);
      for (int k = 0; k < len; ++k)
        th.word.push_back({gens[rng() % 3], rng() % 2 ? 1 : -1});
      handles.push_back(th);
    }
    IntMat linking = IntMat::Zero(two, two);
    HandleComplex hc(gens, handles, linking);
    HomologySummary s = homology_summary(hc);
    IntMat d2 = boundary_matrix_2(hc);
    SmithDecomposition snf = smith_normal_form(d2);
    int rank = 0;
    for (Eigen::Index t = 0; t < std::min(d2.rows(), d2.cols()); ++t)
      if (snf.s(t, t) != 0) ++rank;
    CHECK(s.h2_rank + rank == two);
    CHECK((d2 * s.h2_basis).isZero());
  }
}

TEST_CASE("intersection forms of handle complexes") {
  // no 1-handles: the framed linking matrix comes straight through
  IntMat linking(3, 3);
  linking << 0, 2, 0, 2, 0, 0, 0, 0, 0;
  std::vector<TwoHandle> plain(3);
  plain[0].framing = 6;
  plain[1].framing = 0;
  plain[2].framing = -1;
  HandleComplex no_ones({}, plain, linking);
  IntMat expected(3, 3);
  expected << 6, 2, 0, 2, 0, 0, 0, 0, -1;
  CHECK(intersection_form_of_complex(no_ones).matrix() == expected);

  // trivial H2 gives the rank-0 form
  CHECK(intersection_form_of_complex(fig_a()).rank() == 0);

  // ker boundary = Z restricted to a framed generator gives [framing]
  SymmetricForm f = intersection_form_of_complex(fig_c(7));
  REQUIRE(f.rank() == 1);
  CHECK(f.matrix()(0, 0) == 7);

  // two 2-handles with no linking data is an error
  std::vector<TwoHandle> two(2);
  CHECK_THROWS_AS(intersection_form_of_complex(HandleComplex({}, two)), input_error);
}

TEST_CASE("restriction is independent of the kernel basis choice") {
  // complex with one 1-handle and three 2-handles whose words have
  // exponent sums (2, 0, 0): the kernel is 2-dimensional
  std::vector<TwoHandle> handles(3);
  handles[0].word = word({{"x", 1}, {"x", 1}});
  handles[1].word = word({{"x", 1}, {"x", -1}});
  handles[2].word = {};
  IntMat linking(3, 3);
  linking << 0, 1, 2, 1, 0, -1, 2, -1, 0;
  handles[0].framing = 3;
  handles[1].framing = -2;
  handles[2].framing = 5;
  HandleComplex hc({"x"}, handles, linking);

  SymmetricForm restricted = intersection_form_of_complex(hc);
  REQUIRE(restricted.rank() == 2);

  // a different saturated basis of the same kernel must give a congruent form
  HomologySummary s = homology_summary(hc);
  IntMat change(2, 2);
  change << 1, 1, 0, -1;  // unimodular
  IntMat other_basis = s.h2_basis * change;
  IntMat q = linking;
  for (int i = 0; i < 3; ++i) q(i, i) = handles[size_t(i)].framing;
  SymmetricForm other(other_basis.transpose() * q * other_basis);
  CHECK(verify_congruence(restricted, other, change));
}

TEST_CASE("abelianization consistency on random words") {
  std::mt19937 rng(67);
  std::vector<std::string> gens{"a", "b", "c", "d"};
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<TwoHandle> handles(1 + rng() % 3);
    for (auto& h : handles) {
      int len = int(rng() % 8);
      for (int k = 0; k < len; ++k)
        h.word.push_back({gens[rng() % gens.size()], rng() % 2 ? 1 : -1});
    }
    IntMat linking = IntMat::Zero(Eigen::Index(handles.size()), Eigen::Index(handles.size()));
    HandleComplex hc(gens, handles, linking);
    GroupPresentation p = pi1_presentation(hc);
    IntMat d2 = boundary_matrix_2(hc);
    for (size_t j = 0; j < p.relators.size(); ++j) {
      IntVec sums = IntVec::Zero(Eigen::Index(gens.size()));
      for (const Letter& l : p.relators[j]) sums(hc.generator_index(l.first)) += l.second;
      CHECK(sums == d2.col(Eigen::Index(j)));
    }
  }
}

TEST_CASE("no 1-handles: the complex form equals the framed linking matrix") {
  FramedLink fl = parse_pd(
      "X(1,7,2,10), X(7,3,8,2), X(3,9,4,8), X(9,1,10,6), X(4,12,5,11), X(5,12,6,11)",
      std::vector<Int>{6, 0, -1});
  IntMat lk = linking_matrix(fl);
  std::vector<TwoHandle> handles(3);
  for (int i = 0; i < 3; ++i) handles[size_t(i)].framing = fl.framings[size_t(i)];
  HandleComplex hc({}, handles, lk);
  CHECK(intersection_form_of_complex(hc).matrix() == lk);
}

TEST_CASE("knot traces") {
  FramedLink trefoil0 = parse_pd("X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)", std::vector<Int>{0});
  HandleComplex trace = knot_trace(trefoil0);
  CHECK(trace.one_handles().empty());
  CHECK(trace.two_handles().size() == 1);
  CHECK(intersection_form_of_complex(trace).matrix()(0, 0) == 0);

  FramedLink unknot1 = parse_pd("", std::vector<Int>{1}, 1);
  CHECK(intersection_form_of_complex(knot_trace(unknot1)).matrix()(0, 0) == 1);

  FramedLink unknotn = parse_pd("", std::vector<Int>{-7}, 1);
  CHECK(intersection_form_of_complex(knot_trace(unknotn)).matrix()(0, 0) == -7);

  FramedLink hopf = parse_pd("X(1,3,2,4), X(3,1,4,2)", std::vector<Int>{0, 0});
  CHECK_THROWS_AS(knot_trace(hopf), input_error);
}
