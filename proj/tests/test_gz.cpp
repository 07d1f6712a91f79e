#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "mitosis/gz.hpp"
#include "mitosis/schubert.hpp"

using namespace mitosis;
using gz::Equation;
using gz::EquationFace;
using gz::Flavor;
using gz::Kind;
using gz::Shape;
using poly::Rational;
using weyl::Type;

static gz::Weight weight(std::vector<int> xs) {
  gz::Weight w;
  for (int x : xs) w.push_back(Rational(x));
  return w;
}

static std::vector<poly::Point> face_points(const poly::FaceLattice& L, const poly::FaceHandle& f) {
  std::vector<poly::Point> pts;
  for (int v : f.vertex_ids()) pts.push_back(L.vertices()[v]);
  return pts;
}

TEST(Shape, Sizes) {
  EXPECT_EQ(Shape(Type::A, 6).d(), 21);
  EXPECT_EQ(Shape(Type::C, 4).d(), 16);
  EXPECT_EQ(Shape(Type::C, 2).rows(), 3);
  EXPECT_EQ(Shape(Type::C, 3).row_length(4), 1);
  for (Type t : {Type::A, Type::C})
    for (int n = 1; n <= 5; ++n) {
      const Shape s(t, n);
      for (int idx = 0; idx < s.d(); ++idx) EXPECT_EQ(s.index(s.cell(idx)), idx);
      EXPECT_EQ(static_cast<int>(s.cells().size()), s.d());
    }
  EXPECT_THROW(Shape(Type::A, 0), domain_error);
  EXPECT_THROW(Shape(Type::C, 6), capacity_error);
}

TEST(Polytope, IntervalForRankOne) {
  const auto H = gz::gz_polytope(Shape(Type::A, 1), weight({1, 0}));
  EXPECT_EQ(poly::vertices(H), (std::vector<poly::Point>{fixtures::point({0}), fixtures::point({1})}));
}

TEST(Polytope, Dimensions) {
  EXPECT_EQ(gz::gz_polytope(Shape(Type::A, 6), gz::rho(6)).dim(), 21);
  const auto C = gz::gz_polytope(Shape(Type::C, 4), gz::rho(4));
  EXPECT_EQ(C.dim(), 16);
  EXPECT_EQ(C.row_count(), 32);
  EXPECT_EQ(C.rows()[5].label, "B(1,3)");
}

TEST(Polytope, WeightChecked) {
  EXPECT_THROW(gz::gz_polytope(Shape(Type::A, 2), weight({2, 2, 0})), domain_error);
  EXPECT_THROW(gz::gz_polytope(Shape(Type::A, 2), weight({2, 1})), domain_error);
  EXPECT_THROW(gz::gz_polytope(Shape(Type::C, 2), weight({3, 2, 1})), domain_error);
}

TEST(KoganVertex, TypeAPoint) {
  const Shape s(Type::A, 2);
  EXPECT_EQ(gz::point_of(gz::kogan_vertex(s), weight({2, 1, 0})), weight({2, 1, 2}));
}

TEST(KoganVertex, TypeCPoint) {
  const Shape s(Type::C, 2);
  EXPECT_EQ(gz::point_of(gz::kogan_vertex(s), weight({2, 1, 0})), weight({2, 1, 1, 1}));
}

TEST(KoganVertex, DualPoint) {
  const auto v = gz::dual_kogan_vertex(2);
  EXPECT_EQ(gz::point_of(v, weight({2, 1, 0})), weight({1, 0, 1, 0}));
  EXPECT_EQ(v, EquationFace(Shape(Type::C, 2), std::vector<Equation>{{Kind::B, 1, 1}, {Kind::B, 1, 2},
                                                                     {Kind::A, 2, 1}, {Kind::B, 3, 1}}));
}

TEST(KoganVertex, SimpleVerticesOfThePolytope) {
  auto check = [](const Shape& s, const EquationFace& v) {
    const poly::FaceLattice L(gz::gz_polytope(s, gz::rho(s.n())));
    const int id = L.vertex_index(gz::point_of(v, gz::rho(s.n())));
    const auto f = L.vertex_face(id);
    EXPECT_EQ(static_cast<int>(f.tight.size()), s.d());
    EXPECT_EQ(gz::mask_of_face(f), v.mask);
  };
  for (int n = 1; n <= 3; ++n) check(Shape(Type::A, n), gz::kogan_vertex(Shape(Type::A, n)));
  check(Shape(Type::C, 2), gz::kogan_vertex(Shape(Type::C, 2)));
  check(Shape(Type::C, 2), gz::dual_kogan_vertex(2));
}

TEST(Measure, EmptySet) {
  for (Type t : {Type::A, Type::C}) {
    const Shape s(t, 3);
    const auto m = gz::close_and_measure(EquationFace(s));
    EXPECT_TRUE(m.feasible);
    EXPECT_EQ(m.dim, s.d());
    EXPECT_EQ(m.closure, 0u);
  }
}

TEST(Measure, ThirteenDimensionalFace) {
  EXPECT_EQ(gz::close_and_measure(fixtures::thirteen_dim_face()).dim, 13);
}

TEST(Measure, Infeasible) {
  const Shape s(Type::A, 3);
  const EquationFace f(s, std::vector<Equation>{{Kind::A, 1, 1}, {Kind::B, 1, 1}});
  EXPECT_FALSE(gz::close_and_measure(f).feasible);
}

TEST(Measure, Squeeze) {
  // x^2_1 = x^1_1 and x^2_1 = x^1_2 squeeze x^1_1 >= lambda_2 >= x^1_2 to lambda_2.
  const Shape s(Type::A, 2);
  const EquationFace g(s, std::vector<Equation>{{Kind::A, 2, 1}, {Kind::B, 2, 1}});
  const auto m = gz::close_and_measure(g);
  EXPECT_TRUE(m.feasible);
  EXPECT_EQ(m.dim, 0);
  EXPECT_TRUE(m.closure & gz::mask_of(s, {Kind::B, 1, 1}));
  EXPECT_TRUE(m.closure & gz::mask_of(s, {Kind::A, 1, 2}));
  EXPECT_FALSE(m.closure & gz::mask_of(s, {Kind::A, 1, 1}));
}

// The equation calculus against exact geometry on every subset of the
// vertex equations.
static void dimension_oracle(const Shape& s, Flavor fl) {
  const poly::FaceLattice L(gz::gz_polytope(s, gz::rho(s.n())));
  int disagreements = 0;
  for (gz::EqMask m : gz::vertex_subfaces(s, fl)) {
    const auto f = gz::face_of_mask(L, m);
    const auto meas = gz::close_and_measure(s, m);
    disagreements += meas.dim != poly::affine_dimension(face_points(L, f));
    disagreements += meas.closure != gz::mask_of_face(f);
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(Measure, OracleTypeA2) { dimension_oracle(Shape(Type::A, 2), Flavor::kogan); }
TEST(Measure, OracleTypeA3) { dimension_oracle(Shape(Type::A, 3), Flavor::kogan); }
TEST(Measure, OracleTypeC2) {
  dimension_oracle(Shape(Type::C, 2), Flavor::kogan);
  dimension_oracle(Shape(Type::C, 2), Flavor::dual);
}

TEST(Measure, OracleArbitraryMasks) {
  const Shape s(Type::C, 2);
  const poly::FaceLattice L(gz::gz_polytope(s, gz::rho(2)));
  for (gz::EqMask m = 0; m < (gz::EqMask{1} << (2 * s.d())); ++m) {
    const auto f = gz::face_of_mask(L, m);
    const auto meas = gz::close_and_measure(s, m);
    ASSERT_EQ(meas.feasible, !f.empty()) << m;
    if (meas.feasible) {
      EXPECT_EQ(meas.dim, f.dim);
      EXPECT_EQ(meas.closure, gz::mask_of_face(f));
    }
  }
}

TEST(Diagram, VertexIsFull) {
  for (Type t : {Type::A, Type::C}) {
    const Shape s(t, 3);
    EXPECT_EQ(gz::diagram_of(gz::kogan_vertex(s), Flavor::kogan), s.cells());
  }
  EXPECT_EQ(gz::diagram_of(gz::dual_kogan_vertex(3), Flavor::dual), Shape(Type::C, 3).cells());
}

TEST(Diagram, RoundTrip) {
  for (int n = 1; n <= 3; ++n)
    for (Type t : {Type::A, Type::C})
      for (Flavor fl : {Flavor::kogan, Flavor::dual}) {
        if (t == Type::A && fl == Flavor::dual) continue;
        const Shape s(t, n);
        for (gz::EqMask m : gz::vertex_subfaces(s, fl)) {
          const EquationFace f(s, m);
          EXPECT_EQ(gz::face_of_diagram(s, gz::diagram_of(f, fl), fl), f);
        }
      }
}

TEST(Diagram, FlavorMismatch) {
  EXPECT_THROW(gz::vertex_face(Shape(Type::A, 2), Flavor::dual), domain_error);
  EXPECT_THROW(gz::face_of_diagram(Shape(Type::A, 2), {{3, 1}}, Flavor::kogan), domain_error);
}

TEST(Diagram, FigureSevenLastFaces) {
  const Shape s(Type::C, 2);
  const EquationFace x(s, std::vector<Equation>{{Kind::B, 1, 2}});
  const EquationFace y(s, std::vector<Equation>{{Kind::B, 3, 1}});
  EXPECT_EQ(gz::diagram_of(x, Flavor::dual), (gz::Diagram{{1, 2}}));
  EXPECT_EQ(gz::diagram_of(y, Flavor::dual), (gz::Diagram{{3, 1}}));
}

TEST(Bijection, TypeATranspose) {
  const auto F = fixtures::thirteen_dim_face();
  EXPECT_EQ(gz::to_pipe_dream_A(6, gz::diagram_of(F, Flavor::kogan)), fixtures::fig2_left());
  EXPECT_EQ(gz::diagram_of_pipe_dream(fixtures::fig2_left()), gz::diagram_of(F, Flavor::kogan));
}

TEST(Bijection, TypeCCells) {
  EXPECT_EQ(gz::gz_of_pd_C(4, {4, 4}), (gz::GZCell{7, 1}));
  EXPECT_EQ(gz::gz_of_pd_C(4, {1, 5}), (gz::GZCell{2, 3}));
  EXPECT_EQ(gz::gz_of_pd_C(4, {1, 1}), (gz::GZCell{1, 1}));
  EXPECT_EQ(gz::gz_of_pd_C(4, {1, 7}), (gz::GZCell{2, 1}));
}

TEST(Bijection, Exhaustive) {
  for (int n = 1; n <= 5; ++n) {
    std::set<gz::GZCell> seen_a, seen_c;
    for (auto c : pd::region_cells(pd::Family::A, n)) {
      EXPECT_EQ(gz::pd_of_gz_A(n, gz::gz_of_pd_A(n, c)), c);
      seen_a.insert(gz::gz_of_pd_A(n, c));
    }
    for (auto c : pd::region_cells(pd::Family::C, n)) {
      EXPECT_EQ(gz::pd_of_gz_C(n, gz::gz_of_pd_C(n, c)), c);
      seen_c.insert(gz::gz_of_pd_C(n, c));
    }
    const auto ca = Shape(Type::A, n).cells(), cc = Shape(Type::C, n).cells();
    EXPECT_EQ(seen_a, std::set<gz::GZCell>(ca.begin(), ca.end()));
    EXPECT_EQ(seen_c, std::set<gz::GZCell>(cc.begin(), cc.end()));
  }
  EXPECT_THROW(gz::gz_of_pd_C(3, {2, 1}), domain_error);
  EXPECT_THROW(gz::pd_of_gz_A(3, {3, 2}), domain_error);
}

TEST(Admissible, KoganFacesOfTypeA) {
  for (int n = 2; n <= 3; ++n) {
    const Shape s(Type::A, n);
    const poly::FaceLattice L(gz::gz_polytope(s, gz::rho(n)));
    for (gz::EqMask m : gz::vertex_subfaces(s, Flavor::kogan))
      for (int i = 1; i <= n; ++i) {
        if (!(m & gz::mask_of(s, {Kind::A, 1, i}))) continue;
        const auto P = gz::face_of_mask(L, gz::mask_of(s, {Kind::A, 1, i}));
        EXPECT_TRUE(poly::expand(L, L.top(), P, gz::face_of_mask(L, m)));
      }
  }
}

TEST(Adapted, VertexLosesOneCell) {
  for (int n = 1; n <= 4; ++n) {
    const Shape s(Type::A, n);
    const auto v = gz::kogan_vertex(s);
    for (int i = 1; i <= n; ++i) {
      const auto kids = gz::adapted_mitosis_A(i, v);
      ASSERT_EQ(kids.size(), 1u);
      auto expect = s.cells();
      expect.erase(std::find(expect.begin(), expect.end(), gz::GZCell{n - i + 1, i}));
      EXPECT_EQ(gz::diagram_of(kids[0], Flavor::kogan), expect);
    }
  }
}

TEST(Adapted, ThirteenToFourteen) {
  const auto F = fixtures::thirteen_dim_face();
  const auto kids = gz::adapted_mitosis_A(1, F);
  ASSERT_EQ(kids.size(), 3u);
  std::set<gz::Diagram> got, want;
  for (const auto& E : kids) {
    EXPECT_EQ(gz::close_and_measure(E).dim, 14);
    got.insert(gz::diagram_of(E, Flavor::kogan));
  }
  for (const auto& D : fixtures::fig3()) want.insert(gz::diagram_of_pipe_dream(D));
  EXPECT_EQ(got, want);
}

TEST(Adapted, EmptyWhenFirstCellOpen) {
  const Shape s(Type::A, 3);
  const EquationFace F(s, std::vector<Equation>{{Kind::A, 1, 2}});
  EXPECT_TRUE(gz::adapted_mitosis_A(1, F).empty());
}

TEST(Adapted, RejectsNonReduced) {
  // Pipe dream crosses (1,2) and (2,1) both read s_2.
  const Shape s(Type::A, 3);
  const EquationFace F(s, std::vector<Equation>{{Kind::A, 1, 2}, {Kind::A, 2, 1}});
  ASSERT_FALSE(gz::is_reduced_kogan(F));
  EXPECT_THROW(gz::adapted_mitosis_A(1, F), domain_error);
}

TEST(Adapted, GeometricAgreesWithSymbolic) {
  for (int n = 2; n <= 3; ++n) {
    const Shape s(Type::A, n);
    const poly::FaceLattice L(gz::gz_polytope(s, gz::rho(n)));
    for (gz::EqMask m : gz::vertex_subfaces(s, Flavor::kogan)) {
      const EquationFace F(s, m);
      if (!gz::is_reduced_kogan(F)) continue;
      for (int i = 1; i <= n; ++i) EXPECT_EQ(gz::adapted_mitosis_A_geometric(L, i, F), gz::adapted_mitosis_A(i, F));
    }
  }
}

TEST(Adapted, CombinatorialMatchAtRankFour) {
  const Shape s(Type::A, 4);
  int checked = 0;
  for (gz::EqMask m : gz::vertex_subfaces(s, Flavor::kogan)) {
    const EquationFace F(s, m);
    if (!gz::is_reduced_kogan(F)) continue;
    const auto D = gz::to_pipe_dream_A(4, gz::diagram_of(F, Flavor::kogan));
    const int dim = gz::close_and_measure(F).dim;
    for (int i = 1; i <= 4; ++i) {
      std::set<gz::Diagram> got, want;
      for (const auto& E : gz::adapted_mitosis_A(i, F)) {
        got.insert(gz::diagram_of(E, Flavor::kogan));
        EXPECT_EQ(gz::close_and_measure(E).dim, dim + 1);
      }
      for (const auto& E : pd::mitosis_A(i, D)) want.insert(gz::diagram_of_pipe_dream(E));
      EXPECT_EQ(got, want);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Plain, TypeCVertexHasOffspringForEachIndex) {
  const Shape s(Type::C, 2);
  gz::Calculus calc(s);
  const auto v = gz::kogan_vertex(s);
  for (int i = 1; i <= 2; ++i) {
    const auto r = gz::plain_mitosis(calc, Flavor::kogan, i, v.mask, false);
    ASSERT_TRUE(r);
    EXPECT_TRUE(r->admissible);
    EXPECT_FALSE(r->offsprings.empty());
    for (auto e : r->offsprings) EXPECT_EQ(calc.measure(e).dim, 1);
  }
}

TEST(Plain, OutsidePGivesNothing) {
  const Shape s(Type::A, 2);
  gz::Calculus calc(s);
  EXPECT_FALSE(gz::plain_mitosis(calc, Flavor::kogan, 1, 0, false));
  EXPECT_THROW(gz::plain_mitosis(calc, Flavor::kogan, 3, 0, false), domain_error);
}

TEST(Symbolic, RequiresSimpleVertex) {
  const Shape s(Type::A, 2);
  gz::Calculus calc(s);
  EXPECT_THROW(gz::require_simple(calc, gz::mask_of(s, {Kind::A, 1, 1})), domain_error);
  EXPECT_NO_THROW(gz::require_simple(calc, gz::kogan_vertex(s).mask));
}

TEST(Render, Vertex) {
  EXPECT_EQ(gz::render(gz::kogan_vertex(Shape(Type::A, 2))), "- - -\n A A\n  A");
  EXPECT_EQ(gz::render(gz::dual_kogan_vertex(2)), "- - -\n B B\n  A\n   B");
  const Shape s(Type::A, 2);
  EXPECT_EQ(gz::render(EquationFace(s, std::vector<Equation>{{Kind::A, 1, 2}, {Kind::B, 1, 2}})),
            "- - -\n . *\n  .");
}

TEST(Equation, Text) {
  EXPECT_EQ(gz::to_string(Equation{Kind::B, 3, 1}), "B(3,1)");
  EXPECT_EQ(gz::to_string(fixtures::fig8_face()).substr(0, 22), "{B(1,1),B(1,2),B(1,3),");
}
