#pragma once

// Figure and example data shared by the unit tests and the acceptance runner.

#include <map>
#include <string>
#include <vector>

#include "mitosis/gz.hpp"
#include "mitosis/pipedream.hpp"
#include "mitosis/polykernel.hpp"
#include "mitosis/weyl.hpp"

namespace fixtures {

using namespace mitosis;

inline pd::PipeDreamA fig2_left() {
  return pd::PipeDreamA(6, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 1}, {4, 1}, {5, 1}});
}

// Rows 1 and 2 follow the three offsprings of the two-row example; rows 3-5 keep their crosses.
inline std::vector<pd::PipeDreamA> fig3() {
  return {
      pd::PipeDreamA(6, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 1}, {4, 1}, {5, 1}}),
      pd::PipeDreamA(6, {{1, 3}, {1, 4}, {2, 1}, {2, 3}, {3, 1}, {4, 1}, {5, 1}}),
      pd::PipeDreamA(6, {{1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {4, 1}, {5, 1}}),
  };
}

inline pd::SkewPipeDreamC fig2_right() {
  return pd::SkewPipeDreamC(4, {{1, 1}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {3, 5}, {4, 4}});
}

inline std::vector<pd::SkewPipeDreamC> fig4() {
  return {
      pd::SkewPipeDreamC(4, {{1, 1}, {1, 3}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {3, 5}, {4, 4}}),
      pd::SkewPipeDreamC(4, {{1, 1}, {1, 3}, {1, 5}, {2, 3}, {3, 3}, {3, 4}, {3, 5}, {4, 4}}),
      pd::SkewPipeDreamC(4, {{1, 1}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 3}, {3, 4}, {3, 5}}),
  };
}

inline poly::Row row(std::vector<int> a, int b, std::string label = {}) {
  poly::Vector v;
  for (int x : a) v.push_back(poly::Rational(x));
  return {std::move(v), poly::Rational(b), std::move(label)};
}

inline poly::Point point(std::vector<int> xs) {
  poly::Point p;
  for (int x : xs) p.push_back(poly::Rational(x));
  return p;
}

// 0 <= x1 <= 1, 0 <= x3 <= 1, 0 <= x2, x1 + x2 + x3 <= 2. P1/Q1 cut x3, P2/Q2 cut x1.
inline poly::HPolytope fflv() {
  return poly::HPolytope(3, {row({1, 0, 0}, 1, "P2"), row({-1, 0, 0}, 0, "Q2"), row({0, 0, -1}, 0, "P1"),
                             row({0, 0, 1}, 1, "Q1"), row({0, -1, 0}, 0, "x2>=0"),
                             row({1, 1, 1}, 2, "S")});
}

// The two triangles cut from the unit square by its diagonal.
inline poly::HPolytope triangle_upper() {
  return poly::HPolytope(2, {row({1, 0}, 1), row({0, 1}, 1), row({-1, -1}, -1)});
}
inline poly::HPolytope triangle_lower() {
  return poly::HPolytope(2, {row({-1, 0}, 0), row({0, -1}, 0), row({1, 1}, 1)});
}

// {x1, x2, x3 <= 1, 1 <= x1 + x2 + x3 <= 2}
inline poly::HPolytope diagonal_slab() {
  return poly::HPolytope(3, {row({1, 0, 0}, 1), row({0, 1, 0}, 1), row({0, 0, 1}, 1),
                             row({-1, -1, -1}, -1), row({1, 1, 1}, 2)});
}

// The 13-dimensional Kogan face of GZ^A for n = 6 given by eight equations.
inline gz::EquationFace thirteen_dim_face() {
  using gz::Kind;
  const gz::Shape sh(weyl::Type::A, 6);
  return gz::EquationFace(sh, std::vector<gz::Equation>{{Kind::A, 1, 1}, {Kind::A, 2, 1}, {Kind::A, 3, 1},
                                                        {Kind::A, 4, 1}, {Kind::A, 3, 2}, {Kind::A, 1, 3},
                                                        {Kind::A, 1, 4}, {Kind::A, 1, 5}});
}

// (s1)(-s2 -s1 s2)(s3 s2 s1 s2 -s3)(-s4 s3 -s2 -s1 s2 s3 s4), positions of kept letters in w0_bar(4).
inline weyl::Positions fig8_subword() { return {1, 4, 5, 6, 7, 8, 11, 14, 15, 16}; }

inline gz::EquationFace fig8_face() {
  using gz::Kind;
  const gz::Shape sh(weyl::Type::C, 4);
  return gz::EquationFace(sh, std::vector<gz::Equation>{{Kind::B, 1, 1}, {Kind::B, 1, 2}, {Kind::B, 1, 3},
                                                        {Kind::A, 2, 2}, {Kind::B, 3, 2}, {Kind::B, 3, 3},
                                                        {Kind::A, 4, 1}, {Kind::A, 4, 2}, {Kind::B, 5, 1},
                                                        {Kind::B, 7, 1}});
}

// The face sets drawn in the C_2 dual mitosis figure, keyed by the chain word.
inline std::map<weyl::Word, std::vector<std::vector<gz::Equation>>> fig7() {
  using gz::Kind;
  const gz::Equation b11{Kind::B, 1, 1}, b12{Kind::B, 1, 2}, a21{Kind::A, 2, 1}, b31{Kind::B, 3, 1};
  return {
      {{}, {{b11, b12, a21, b31}}},
      {{2}, {{b12, a21, b31}}},
      {{2, 1}, {{b11, b31}, {a21, b31}}},
      {{2, 1, 2}, {{b12}, {b31}}},
      {{1}, {{b11, b12, a21}}},
      {{1, 2}, {{b12, a21}}},
      {{1, 2, 1}, {{b11}, {a21}}},
      {{2, 1, 2, 1}, {{}}},
  };
}

inline std::vector<gz::EquationFace> faces(const gz::Shape& sh,
                                           const std::vector<std::vector<gz::Equation>>& eqs) {
  std::vector<gz::EquationFace> out;
  for (const auto& e : eqs) out.emplace_back(sh, e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures
