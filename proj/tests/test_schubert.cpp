#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "mitosis/schubert.hpp"
#include "mitosis/verify.hpp"

using namespace mitosis;
using gz::Equation;
using gz::EquationFace;
using gz::Kind;
using schubert::IntPolynomial;
using weyl::Type;

static IntPolynomial x(int vars, int k) { return IntPolynomial::variable(vars, k); }

static std::vector<IntPolynomial> corpus(int vars, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<IntPolynomial> out;
  for (int t = 0; t < count; ++t) {
    IntPolynomial p(vars);
    const int terms = 1 + rng() % 6;
    for (int k = 0; k < terms; ++k) {
      schubert::Exponent e(vars);
      for (auto& a : e) a = rng() % 4;
      p.add(e, static_cast<long long>(rng() % 11) - 5);
    }
    out.push_back(p);
  }
  return out;
}

TEST(Polynomial, Arithmetic) {
  const auto a = x(3, 1), b = x(3, 2);
  EXPECT_EQ((a + b) * (a - b), a * a - b * b);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(IntPolynomial::constant(3, 0), IntPolynomial(3));
  EXPECT_EQ((a * a * b).str(), "x1^2*x2");
  EXPECT_EQ((a * b).swapped(1), a * b);
  EXPECT_EQ((a * a).swapped(2), a * a);
  EXPECT_EQ((a * a * b).swapped(1), a * b * b);
}

TEST(DividedDifference, Examples) {
  EXPECT_EQ(schubert::divided_difference(1, x(3, 1)), IntPolynomial::constant(3, 1));
  EXPECT_EQ(schubert::divided_difference(1, x(3, 1) * x(3, 1) * x(3, 2)), x(3, 1) * x(3, 2));
  EXPECT_TRUE(schubert::divided_difference(1, x(3, 1) + x(3, 2)).is_zero());
  EXPECT_TRUE(schubert::divided_difference(2, x(3, 1)).is_zero());
}

TEST(DividedDifference, CorpusIdentities) {
  const int vars = 5;
  for (const auto& f : corpus(vars, 100, 2024)) {
    for (int i = 1; i < vars; ++i) {
      EXPECT_TRUE(schubert::divided_difference(i, schubert::divided_difference(i, f)).is_zero());
      for (int j = i + 2; j < vars; ++j)
        EXPECT_EQ(schubert::divided_difference(i, schubert::divided_difference(j, f)),
                  schubert::divided_difference(j, schubert::divided_difference(i, f)));
      if (i + 1 < vars) {
        auto d = [&](int k, const IntPolynomial& g) { return schubert::divided_difference(k, g); };
        EXPECT_EQ(d(i, d(i + 1, d(i, f))), d(i + 1, d(i, d(i + 1, f))));
      }
    }
  }
}

TEST(SchubertPolynomial, Extremes) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(schubert::schubert_polynomial(n, weyl::longest(Type::A, n)), schubert::staircase(n));
    EXPECT_EQ(schubert::schubert_polynomial(n, weyl::Element::identity(Type::A, n)),
              IntPolynomial::constant(n + 1, 1));
  }
  EXPECT_EQ(schubert::staircase(2), x(3, 1) * x(3, 1) * x(3, 2));
}

TEST(SchubertPolynomial, Known) {
  EXPECT_EQ(schubert::schubert_polynomial(2, weyl::permutation({2, 1, 3})), x(3, 1));
  EXPECT_EQ(schubert::schubert_polynomial(2, weyl::permutation({1, 3, 2})), x(3, 1) + x(3, 2));
  EXPECT_EQ(schubert::schubert_polynomial(2, weyl::permutation({3, 1, 2})), x(3, 1) * x(3, 1));
}

TEST(SchubertPolynomial, WordIndependence) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& w : weyl::all_elements(Type::A, n)) {
      const auto target = w.inverse() * weyl::longest(Type::A, n);
      const auto ref = schubert::schubert_polynomial(n, w);
      for (const auto& word : weyl::reduced_words(target))
        EXPECT_EQ(schubert::schubert_polynomial_via(n, w, word), ref) << w.str();
    }
}

TEST(SchubertPolynomial, PipeDreamSum) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& w : weyl::all_elements(Type::A, n))
      EXPECT_EQ(schubert::pipe_dream_sum(pd::enumerate_reduced_pipe_dreams(n, w), n),
                schubert::schubert_polynomial(n, w))
          << w.str();
}

TEST(GenerateSw, Identity) {
  const gz::Shape s(Type::A, 3);
  EXPECT_EQ(schubert::generate_Sw(3, {}), (std::vector<EquationFace>{gz::kogan_vertex(s)}));
}

TEST(GenerateSw, LongestGivesWholePolytope) {
  const gz::Shape s(Type::A, 2);
  for (const auto& word : weyl::reduced_words(weyl::longest(Type::A, 2)))
    EXPECT_EQ(schubert::generate_Sw(2, word), (std::vector<EquationFace>{EquationFace(s)}));
}

TEST(GenerateSw, RejectsNonReduced) { EXPECT_THROW(schubert::generate_Sw(2, {1, 1}), domain_error); }

TEST(GenerateSw, RankThreeIdentities) {
  const int n = 3;
  const auto w0 = weyl::longest(Type::A, n);
  for (const auto& w : weyl::all_elements(Type::A, n)) {
    const auto u = w0 * w;
    const auto words = weyl::reduced_words(w);
    const auto first = schubert::generate_Sw(n, words.front());
    EXPECT_EQ(first.size(), pd::enumerate_reduced_pipe_dreams(n, u).size()) << w.str();
    IntPolynomial sum(n + 1);
    for (const auto& f : first) {
      sum = sum + schubert::diagram_monomial(f);
      EXPECT_EQ(gz::close_and_measure(f).dim, static_cast<int>(words.front().size()));
    }
    EXPECT_EQ(sum, schubert::schubert_polynomial(n, u)) << w.str();
    for (const auto& word : words) EXPECT_EQ(schubert::generate_Sw(n, word), first);
  }
}

TEST(GenerateSw, VerifierClean) {
  EXPECT_EQ(verify::schubert_sw(2).mismatches, 0);
  const auto r = verify::schubert_sw(3);
  EXPECT_EQ(r.mismatches, 0);
  EXPECT_GT(r.checked, 24);
}

TEST(DualSubword, FigureEight) {
  EXPECT_EQ(schubert::dual_subword_face(4, fixtures::fig8_subword()), fixtures::fig8_face());
}

TEST(DualSubword, Extremes) {
  for (int n = 1; n <= 4; ++n) {
    weyl::Positions all(n * n);
    for (int k = 0; k < n * n; ++k) all[k] = k + 1;
    EXPECT_EQ(schubert::dual_subword_face(n, all), gz::dual_kogan_vertex(n));
    EXPECT_EQ(schubert::dual_subword_face(n, {}), EquationFace(gz::Shape(Type::C, n)));
  }
  EXPECT_THROW(schubert::dual_subword_face(2, {2, 1}), domain_error);
  EXPECT_THROW(schubert::dual_subword_face(2, {5}), domain_error);
}

TEST(DualSubword, InscriptionOrder) {
  EXPECT_EQ(schubert::dual_inscription(2), (std::vector<gz::GZCell>{{3, 1}, {2, 1}, {1, 2}, {1, 1}}));
}

TEST(DualFaces, Counts) {
  EXPECT_EQ(schubert::dual_face_count(2, weyl::evaluate(Type::C, 2, {2, 1})), 3);
  for (int n = 1; n <= 3; ++n) {
    const auto w0 = weyl::longest(Type::C, n);
    EXPECT_EQ(schubert::dual_faces(n, w0), (std::vector<EquationFace>{EquationFace(gz::Shape(Type::C, n))}));
    EXPECT_EQ(schubert::dual_faces(n, weyl::Element::identity(Type::C, n)),
              (std::vector<EquationFace>{gz::dual_kogan_vertex(n)}));
  }
}

TEST(DualFaces, DimensionIsLength) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& w : weyl::all_elements(Type::C, n))
      for (const auto& f : schubert::dual_faces(n, w))
        EXPECT_EQ(gz::close_and_measure(f).dim, n * n - weyl::length(weyl::longest(Type::C, n) * w));
}

TEST(DualChain, FigureSeven) {
  const gz::Shape s(Type::C, 2);
  const auto fig = fixtures::fig7();
  const auto report = schubert::compare_dual_chain_vs_subwords(2);
  ASSERT_EQ(report.size(), 8u);
  std::set<weyl::Word> words;
  for (const auto& c : report) {
    words.insert(c.word);
    ASSERT_TRUE(fig.count(c.word));
    EXPECT_EQ(c.chain, fixtures::faces(s, fig.at(c.word)));
    EXPECT_TRUE(c.extra.empty());
    if (c.word == weyl::Word{2, 1})
      EXPECT_EQ(c.missing, fixtures::faces(s, {{{Kind::B, 1, 1}, {Kind::B, 1, 2}}}));
    else
      EXPECT_TRUE(c.missing.empty());
    for (const auto& f : c.chain) EXPECT_EQ(gz::close_and_measure(f).dim, static_cast<int>(c.word.size()));
  }
  EXPECT_EQ(words.size(), weyl::all_elements(Type::C, 2).size());
}

// Feeding every arrow the previous arrow's output loses the descendants of the
// missing face.
TEST(DualChain, CumulativePinned) {
  const gz::Shape s(Type::C, 2);
  for (const auto& c : schubert::compare_dual_chain_vs_subwords(2)) {
    if (c.word == weyl::Word{2, 1, 2})
      EXPECT_EQ(c.cumulative, fixtures::faces(s, {{{Kind::B, 3, 1}}}));
    else if (c.word == weyl::Word{2, 1, 2, 1})
      EXPECT_TRUE(c.cumulative.empty());
    else
      EXPECT_EQ(c.cumulative, c.chain);
  }
}

TEST(DualChain, AdaptedStep) {
  const auto kids = schubert::adapted_dual_mitosis_C(gz::dual_kogan_vertex(2));
  const gz::Shape s(Type::C, 2);
  EXPECT_EQ(kids, fixtures::faces(s, {{{Kind::B, 1, 1}, {Kind::B, 1, 2}, {Kind::A, 2, 1}}}));
}

TEST(DualChain, UnswappedMutationDetected) {
  EXPECT_EQ(verify::dual_chain().mismatches, 0);
  EXPECT_GT(verify::dual_chain({pd::PrefixRule::enforced, true}).mismatches, 0);
}

TEST(DualMitosis, OutsideP) {
  const gz::Shape s(Type::C, 2);
  EXPECT_TRUE(schubert::dual_mitosis_C(1, EquationFace(s)).empty());
  EXPECT_THROW(schubert::dual_mitosis_C(1, gz::kogan_vertex(gz::Shape(Type::A, 2))), domain_error);
}

TEST(Experimental, TypeCGeneration) {
  const gz::Shape s(Type::C, 2);
  EXPECT_EQ(schubert::experimental::generate_Sw_C(2, {}), (std::vector<EquationFace>{gz::kogan_vertex(s)}));
  for (const auto& f : schubert::experimental::generate_Sw_C(2, {1, 2}))
    EXPECT_EQ(gz::close_and_measure(f).dim, 2);
  EXPECT_THROW(schubert::experimental::generate_Sw_C(2, {1, 1}), domain_error);
}
