#pragma once

// Gelfand-Zetlin polytopes of types A and C, faces given by sets of
// equations A(i,j) / B(i,j), the equation calculus (closure, feasibility,
// dimension), diagrams, the bijections with (skew) pipe dreams, and mitosis
// on faces through a simple vertex.
//
// Cell (i,j) of row i holds x^i_j. Row 0 is the weight. Its upper neighbours
// are (i-1,j) and (i-1,j+1):
//   A(i,j) :  x^{i-1}_j = x^i_j        B(i,j) :  x^i_j = x^{i-1}_{j+1}
// In type C the last cell of an odd row i >= 3 has the constant 0 as its
// upper-right neighbour.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "pipedream.hpp"
#include "polykernel.hpp"
#include "weyl.hpp"

namespace mitosis::gz {

using weyl::Type;
using EqMask = std::uint64_t;
using poly::Rational;

struct GZCell {
  int i;
  int j;
  auto operator<=>(const GZCell&) const = default;
};

class Shape {
 public:
  Shape(Type type, int n) : type_(type), n_(n) {
    detail::require(n >= 1, "GZ rank must be positive");
    for (int i = 1; i <= rows(); ++i) {
      start_.push_back(d_);
      d_ += row_length(i);
    }
    if (2 * d_ > 64 || d_ + n_ + 1 > 64) throw capacity_error("GZ pattern too large");
  }

  Type type() const { return type_; }
  int n() const { return n_; }
  int d() const { return d_; }
  int rows() const { return type_ == Type::A ? n_ : 2 * n_ - 1; }

  int row_length(int i) const {
    if (i < 1 || i > rows()) return 0;
    if (type_ == Type::A) return n_ - i + 1;
    const int k = (i + 1) / 2;
    return i % 2 ? n_ - k + 1 : n_ - k;
  }

  bool has(GZCell c) const { return c.j >= 1 && c.j <= row_length(c.i); }

  int index(GZCell c) const {
    if (!has(c))
      throw domain_error("no GZ cell (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")");
    return start_[c.i - 1] + c.j - 1;
  }

  GZCell cell(int idx) const {
    int i = 1;
    while (i < rows() && start_[i] <= idx) ++i;
    return {i, idx - start_[i - 1] + 1};
  }

  std::vector<GZCell> cells() const {
    std::vector<GZCell> out;
    for (int i = 1; i <= rows(); ++i)
      for (int j = 1; j <= row_length(i); ++j) out.push_back({i, j});
    return out;
  }

  // Graph nodes: cells 0..d-1, then lambda_1..lambda_{n+1}.
  int node_count() const { return d_ + n_ + 1; }
  int constant_node(int j) const { return d_ + j - 1; }
  bool is_constant(int node) const { return node >= d_; }

  int upper_left(GZCell c) const {
    return c.i == 1 ? constant_node(c.j) : index({c.i - 1, c.j});
  }
  int upper_right(GZCell c) const {
    if (c.i == 1) return constant_node(c.j + 1);
    if (!has({c.i - 1, c.j + 1})) return constant_node(n_ + 1);
    return index({c.i - 1, c.j + 1});
  }

  bool operator==(const Shape& o) const { return type_ == o.type_ && n_ == o.n_; }

 private:
  Type type_;
  int n_;
  int d_ = 0;
  std::vector<int> start_;
};

using Weight = std::vector<Rational>;

inline Weight rho(int n) {
  Weight w;
  for (int k = n; k >= 0; --k) w.push_back(k);
  return w;
}

inline void check_weight(const Shape& s, const Weight& w) {
  detail::require(static_cast<int>(w.size()) == s.n() + 1, "weight has wrong length");
  for (std::size_t k = 1; k < w.size(); ++k)
    detail::require(w[k - 1] > w[k], "weight is not strictly decreasing");
  if (s.type() == Type::C) detail::require(w.back() == 0, "type C weight must end with 0");
}

// ---------------------------------------------------------------------------
// Equations and faces

enum class Kind { A, B };

struct Equation {
  Kind kind;
  int i;
  int j;
  bool operator==(const Equation&) const = default;
  auto operator<=>(const Equation& o) const {
    if (auto c = i <=> o.i; c != 0) return c;
    if (auto c = j <=> o.j; c != 0) return c;
    return kind <=> o.kind;
  }
};

inline std::string to_string(const Equation& e) {
  return std::string(e.kind == Kind::A ? "A" : "B") + "(" + std::to_string(e.i) + "," +
         std::to_string(e.j) + ")";
}

inline int bit_of(const Shape& s, const Equation& e) {
  return 2 * s.index({e.i, e.j}) + (e.kind == Kind::B ? 1 : 0);
}

inline EqMask mask_of(const Shape& s, Equation e) { return EqMask{1} << bit_of(s, e); }

inline Equation equation_of_bit(const Shape& s, int bit) {
  const GZCell c = s.cell(bit / 2);
  return {bit % 2 ? Kind::B : Kind::A, c.i, c.j};
}

struct EquationFace {
  Shape shape;
  EqMask mask = 0;

  EquationFace(Shape s, EqMask m = 0) : shape(std::move(s)), mask(m) {
    detail::require(2 * shape.d() == 64 || (m >> (2 * shape.d())) == 0,
                    "equation outside the pattern");
  }
  EquationFace(Shape s, const std::vector<Equation>& eqs) : shape(std::move(s)) {
    for (const auto& e : eqs) mask |= mask_of(shape, e);
  }

  std::vector<Equation> eqs() const {
    std::vector<Equation> out;
    for (int b = 0; b < 2 * shape.d(); ++b)
      if (mask >> b & 1) out.push_back(equation_of_bit(shape, b));
    std::sort(out.begin(), out.end());
    return out;
  }
  int size() const { return std::popcount(mask); }
  bool has(Equation e) const { return mask & mask_of(shape, e); }

  bool operator==(const EquationFace& o) const { return shape == o.shape && mask == o.mask; }
  bool operator<(const EquationFace& o) const {
    if (shape.type() != o.shape.type()) return shape.type() < o.shape.type();
    if (shape.n() != o.shape.n()) return shape.n() < o.shape.n();
    return eqs() < o.eqs();
  }
};

inline std::string to_string(const EquationFace& f) {
  std::string s = "{";
  bool first = true;
  for (const auto& e : f.eqs()) {
    if (!first) s += ",";
    s += to_string(e);
    first = false;
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Equation calculus

struct Measure {
  bool feasible = true;
  int dim = 0;
  EqMask closure = 0;    // every equation holding on the face
  std::vector<int> cls;  // component of each node
};

// Cells and constants form a preorder (u >= w). Equations add reverse
// edges. Strongly connected classes are the forced equalities; a class with
// two distinct constants is infeasible, and the free classes count the
// dimension.
inline Measure close_and_measure(const Shape& s, EqMask mask) {
  const int N = s.node_count();
  std::vector<std::uint64_t> reach(N, 0);
  auto edge = [&](int u, int w) { reach[u] |= std::uint64_t{1} << w; };
  for (int u = 0; u < N; ++u) edge(u, u);
  for (int j = 1; j <= s.n(); ++j) edge(s.constant_node(j), s.constant_node(j + 1));
  for (int idx = 0; idx < s.d(); ++idx) {
    const GZCell c = s.cell(idx);
    const int ul = s.upper_left(c), ur = s.upper_right(c);
    edge(ul, idx);
    edge(idx, ur);
    if (mask >> (2 * idx) & 1) edge(idx, ul);
    if (mask >> (2 * idx + 1) & 1) edge(ur, idx);
  }
  for (int k = 0; k < N; ++k)
    for (int u = 0; u < N; ++u)
      if (reach[u] >> k & 1) reach[u] |= reach[k];
  Measure m;
  m.cls.assign(N, -1);
  int classes = 0;
  for (int u = 0; u < N; ++u) {
    if (m.cls[u] >= 0) continue;
    int constants = 0;
    for (int w = u; w < N; ++w) {
      if ((reach[u] >> w & 1) && (reach[w] >> u & 1)) {
        m.cls[w] = classes;
        if (s.is_constant(w)) ++constants;
      }
    }
    if (constants > 1) m.feasible = false;
    if (constants == 0) ++m.dim;
    ++classes;
  }
  if (!m.feasible) {
    m.dim = -1;
    m.closure = 2 * s.d() == 64 ? ~EqMask{0} : (EqMask{1} << (2 * s.d())) - 1;
    return m;
  }
  for (int idx = 0; idx < s.d(); ++idx) {
    const GZCell c = s.cell(idx);
    if (m.cls[idx] == m.cls[s.upper_left(c)]) m.closure |= EqMask{1} << (2 * idx);
    if (m.cls[idx] == m.cls[s.upper_right(c)]) m.closure |= EqMask{1} << (2 * idx + 1);
  }
  return m;
}

inline Measure close_and_measure(const EquationFace& f) { return close_and_measure(f.shape, f.mask); }

// Memoizing wrapper; not thread-safe.
class Calculus {
 public:
  explicit Calculus(Shape s) : shape_(std::move(s)) {}
  const Shape& shape() const { return shape_; }

  const Measure& measure(EqMask m) const {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(m, close_and_measure(shape_, m)).first->second;
  }

  // Point-set inclusion of the faces cut out by x and y.
  bool subset(EqMask x, EqMask y) const {
    const Measure& mx = measure(x);
    if (!mx.feasible) return true;
    const Measure& my = measure(y);
    if (!my.feasible) return false;
    return (mx.closure & my.closure) == my.closure;
  }

 private:
  Shape shape_;
  mutable std::unordered_map<EqMask, Measure> memo_;
};

// Coordinates of a zero-dimensional face, row by row.
inline std::vector<Rational> point_of(const EquationFace& f, const Weight& w) {
  check_weight(f.shape, w);
  const Measure m = close_and_measure(f);
  if (!m.feasible || m.dim != 0) throw domain_error("face is not a vertex");
  const Shape& s = f.shape;
  std::vector<Rational> x(s.d());
  for (int idx = 0; idx < s.d(); ++idx)
    for (int j = 1; j <= s.n() + 1; ++j)
      if (m.cls[s.constant_node(j)] == m.cls[idx]) x[idx] = w[j - 1];
  return x;
}

// ---------------------------------------------------------------------------
// Polytope

inline std::string row_label(const Equation& e) { return to_string(e); }

// Row 2*idx is A at cell idx, row 2*idx+1 is B: row indices agree with the
// bits of EqMask.
inline poly::HPolytope gz_polytope(const Shape& s, const Weight& w) {
  check_weight(s, w);
  const int d = s.d();
  std::vector<poly::Row> rows;
  auto coeff = [&](poly::Vector& a, int node, int sign) -> Rational {
    if (s.is_constant(node)) return -sign * w[node - d];
    a[node] += sign;
    return 0;
  };
  for (int idx = 0; idx < d; ++idx) {
    const GZCell c = s.cell(idx);
    {
      // x^i_j - x^{i-1}_j <= 0
      poly::Vector a(d, Rational(0));
      Rational b = coeff(a, idx, 1) + coeff(a, s.upper_left(c), -1);
      rows.push_back({a, b, row_label({Kind::A, c.i, c.j})});
    }
    {
      // x^{i-1}_{j+1} - x^i_j <= 0
      poly::Vector a(d, Rational(0));
      Rational b = coeff(a, s.upper_right(c), 1) + coeff(a, idx, -1);
      rows.push_back({a, b, row_label({Kind::B, c.i, c.j})});
    }
  }
  return poly::HPolytope(d, std::move(rows));
}

inline EqMask mask_of_face(const poly::FaceHandle& f) {
  EqMask m = 0;
  for (int r : f.tight) m |= EqMask{1} << r;
  return m;
}

inline poly::FaceHandle face_of_mask(const poly::FaceLattice& L, EqMask m) {
  std::vector<int> rows;
  for (int b = 0; b < 64; ++b)
    if (m >> b & 1) rows.push_back(b);
  return L.face_of_rows(rows);
}

// ---------------------------------------------------------------------------
// Kogan-type vertices and diagrams

// kogan: type A all A; type C A on odd rows, B on even rows (symplectic).
// dual (type C only): B on odd rows, A on even rows.
enum class Flavor { kogan, dual };

inline Kind flavor_kind(const Shape& s, Flavor f, int row) {
  if (s.type() == Type::A) {
    detail::require(f == Flavor::kogan, "dual flavor exists only in type C");
    return Kind::A;
  }
  const bool odd = row % 2 == 1;
  if (f == Flavor::kogan) return odd ? Kind::A : Kind::B;
  return odd ? Kind::B : Kind::A;
}

inline EqMask flavor_mask(const Shape& s, Flavor f, GZCell c) {
  return mask_of(s, {flavor_kind(s, f, c.i), c.i, c.j});
}

inline EquationFace vertex_face(const Shape& s, Flavor f) {
  EqMask m = 0;
  for (const auto& c : s.cells()) m |= flavor_mask(s, f, c);
  return {s, m};
}

inline EquationFace kogan_vertex(const Shape& s) { return vertex_face(s, Flavor::kogan); }
inline EquationFace dual_kogan_vertex(int n) { return vertex_face(Shape(Type::C, n), Flavor::dual); }

using Diagram = std::vector<GZCell>;  // sorted

inline Diagram diagram_of(const EquationFace& f, Flavor flavor) {
  const Measure m = close_and_measure(f);
  Diagram out;
  for (const auto& c : f.shape.cells())
    if (m.closure & flavor_mask(f.shape, flavor, c)) out.push_back(c);
  return out;
}

inline EquationFace face_of_diagram(const Shape& s, const Diagram& D, Flavor flavor) {
  EqMask m = 0;
  for (const auto& c : D) {
    if (!s.has(c)) throw domain_error("diagram cell outside the pattern");
    m |= flavor_mask(s, flavor, c);
  }
  return {s, m};
}

// Faces through a flavor vertex, as masks (subsets of the vertex equations).
inline std::vector<EqMask> vertex_subfaces(const Shape& s, Flavor f) {
  if (s.d() > 20) throw capacity_error("too many faces through the vertex");
  const EqMask v = vertex_face(s, f).mask;
  std::vector<EqMask> out;
  for (EqMask sub = v;; sub = (sub - 1) & v) {
    out.push_back(sub);
    if (sub == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Bijections with pipe dreams

inline pd::Cell pd_of_gz_A(int n, GZCell c) {
  if (!Shape(Type::A, n).has(c)) throw domain_error("cell outside the type A pattern");
  return {c.j, c.i};
}

inline GZCell gz_of_pd_A(int n, pd::Cell c) {
  if (!pd::in_region(pd::Family::A, n, c)) throw domain_error("cell outside the staircase");
  return {c.col, c.row};
}

inline pd::Cell pd_of_gz_C(int n, GZCell c) {
  if (!Shape(Type::C, n).has(c)) throw domain_error("cell outside the type C pattern");
  const int k = (c.i + 1) / 2;
  if (c.i % 2) return {k, c.j + k - 1};
  return {k, 2 * n + 1 - k - c.j};
}

inline GZCell gz_of_pd_C(int n, pd::Cell c) {
  if (!pd::in_region(pd::Family::C, n, c)) throw domain_error("cell outside the skew region");
  const int k = c.row;
  if (c.col <= n) return {2 * k - 1, c.col - k + 1};
  return {2 * k, 2 * n + 1 - k - c.col};
}

inline pd::PipeDreamA to_pipe_dream_A(int n, const Diagram& D) {
  std::vector<pd::Cell> crosses;
  for (const auto& c : D) crosses.push_back(pd_of_gz_A(n, c));
  return pd::PipeDreamA(n, std::move(crosses));
}

inline Diagram diagram_of_pipe_dream(const pd::PipeDreamA& D) {
  Diagram out;
  for (const auto& c : D.crosses()) out.push_back(gz_of_pd_A(D.n(), c));
  std::sort(out.begin(), out.end());
  return out;
}

inline pd::SkewPipeDreamC to_pipe_dream_C(int n, const Diagram& D) {
  std::vector<pd::Cell> crosses;
  for (const auto& c : D) crosses.push_back(pd_of_gz_C(n, c));
  return pd::SkewPipeDreamC(n, std::move(crosses));
}

inline Diagram diagram_of_pipe_dream(const pd::SkewPipeDreamC& D) {
  Diagram out;
  for (const auto& c : D.crosses()) out.push_back(gz_of_pd_C(D.n(), c));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_reduced_kogan(const EquationFace& f) {
  detail::require(f.shape.type() == Type::A, "reducedness is defined for type A faces");
  return pd::is_reduced(to_pipe_dream_A(f.shape.n(), diagram_of(f, Flavor::kogan)));
}

// ---------------------------------------------------------------------------
// Mitosis on faces through a simple vertex, computed in the equation
// calculus. Faces through v correspond to subsets of its equations.

struct SymbolicMitosis {
  bool admissible = false;
  EqMask expansion = 0;
  std::vector<EqMask> offsprings;  // ascending
};

inline void require_simple(const Calculus& calc, EqMask v) {
  const Measure& m = calc.measure(v);
  if (!m.feasible || m.dim != 0 || m.closure != v || std::popcount(v) != calc.shape().d())
    throw domain_error("vertex is not simple");
}

// Definition of geometric mitosis inside the face `delta` with P = delta n p,
// Q = delta n q and the face F, all through the simple vertex v.
inline SymbolicMitosis symbolic_mitosis(const Calculus& calc, EqMask v, EqMask delta, EqMask p,
                                        EqMask q, EqMask F) {
  detail::require((F & ~v) == 0 && (delta & ~v) == 0, "faces must contain the vertex");
  detail::require((delta & ~F) == 0, "face is not inside delta");
  if (!(F & p)) throw domain_error("face is not contained in P");
  const int d = calc.shape().d();
  auto dim = [&](EqMask m) { return d - std::popcount(m); };
  SymbolicMitosis res;
  int found = 0;
  const EqMask spare_exp = F & ~delta;
  for (EqMask sub = spare_exp;; sub = (sub - 1) & spare_exp) {
    const EqMask G = delta | sub;
    if (G != F && calc.measure(G | p).closure == F) {
      ++found;
      res.expansion = G;
    }
    if (sub == 0) break;
  }
  if (found != 1) return res;
  if (dim(res.expansion) != dim(F) + 1)
    throw std::logic_error("expansion has dimension other than dim F + 1");
  res.admissible = true;
  const EqMask spare = v & ~delta & ~p;
  const int want = std::popcount(F) - 1 - std::popcount(delta);
  if (want < 0) return res;
  for (EqMask sub = spare;; sub = (sub - 1) & spare) {
    if (std::popcount(sub) == want) {
      const EqMask E = delta | sub;
      const bool in_q = calc.measure(E).closure & q;
      if (!in_q && calc.subset(E | q, res.expansion | q)) res.offsprings.push_back(E);
    }
    if (sub == 0) break;
  }
  std::sort(res.offsprings.begin(), res.offsprings.end());
  if (!std::binary_search(res.offsprings.begin(), res.offsprings.end(), res.expansion))
    throw std::logic_error("exp(F) missing from its own mitosis");
  return res;
}

// The adapted setting for type A: env(F), and the facets P^F, Q^F of env(F).
struct AdaptedSetting {
  EqMask env = 0;
  int s = 0;
  EqMask p = 0;
  EqMask q = 0;
};

inline AdaptedSetting adapted_setting_A(const Calculus& calc, int i, EqMask F) {
  const Shape& sh = calc.shape();
  detail::require(sh.type() == Type::A, "adapted mitosis is defined in type A");
  if (i < 1 || i > sh.n()) throw domain_error("mitosis index out of range 1..n");
  AdaptedSetting a;
  for (int k = 1; sh.has({k, i + 1}); ++k) {
    const EqMask both = mask_of(sh, {Kind::A, k, i}) | mask_of(sh, {Kind::A, k, i + 1});
    if ((F & both) == both) a.env |= both;
  }
  const EqMask closed = calc.measure(a.env).closure;
  for (int k = 1; sh.has({k, i}); ++k) {
    if (!(closed & mask_of(sh, {Kind::A, k, i}))) {
      a.s = k;
      break;
    }
  }
  if (a.s == 0) throw std::logic_error("env(F) satisfies every A equation in its column");
  a.p = mask_of(sh, {Kind::A, a.s, i});
  a.q = mask_of(sh, {Kind::B, a.s, i});
  return a;
}

inline std::vector<EquationFace> adapted_mitosis_A(int i, const EquationFace& F) {
  const Shape& sh = F.shape;
  detail::require(sh.type() == Type::A, "adapted mitosis is defined in type A");
  const EquationFace v = kogan_vertex(sh);
  detail::require((F.mask & ~v.mask) == 0, "face is not a Kogan face");
  if (!is_reduced_kogan(F)) throw domain_error("Kogan face is not reduced");
  Calculus calc(sh);
  const AdaptedSetting a = adapted_setting_A(calc, i, F.mask);
  if (!(F.mask & a.p)) return {};
  require_simple(calc, v.mask);
  const SymbolicMitosis r = symbolic_mitosis(calc, v.mask, a.env, a.p, a.q, F.mask);
  std::vector<EquationFace> out;
  for (EqMask m : r.offsprings) out.emplace_back(sh, m);
  std::sort(out.begin(), out.end());
  return out;
}

// Same operator, computed on the exact polytope.
inline std::vector<EquationFace> adapted_mitosis_A_geometric(const poly::FaceLattice& L, int i,
                                                             const EquationFace& F) {
  const Shape& sh = F.shape;
  Calculus calc(sh);
  const AdaptedSetting a = adapted_setting_A(calc, i, F.mask);
  if (!(F.mask & a.p)) return {};
  const poly::FaceHandle delta = face_of_mask(L, a.env);
  const poly::FaceHandle P = face_of_mask(L, a.env | a.p);
  const poly::FaceHandle Q = face_of_mask(L, a.env | a.q);
  const poly::FaceHandle f = face_of_mask(L, F.mask);
  const EquationFace v = kogan_vertex(sh);
  const int vid = L.vertex_index(point_of(v, rho(sh.n())));
  const poly::MitosisResult r = poly::geometric_mitosis(L, delta, P, Q, vid, f);
  std::vector<EquationFace> out;
  for (const auto& e : r.offsprings) out.emplace_back(sh, mask_of_face(e));
  std::sort(out.begin(), out.end());
  return out;
}

// M^v_i on the whole polytope with P = {x^1_i = lambda_i}, Q = {x^1_i = lambda_{i+1}};
// the dual operator swaps them. Faces not inside P give nullopt.
inline std::optional<SymbolicMitosis> plain_mitosis(const Calculus& calc, Flavor flavor, int i,
                                                    EqMask F, bool swap_pq) {
  const Shape& sh = calc.shape();
  if (i < 1 || i > sh.n()) throw domain_error("mitosis index out of range 1..n");
  const EqMask v = vertex_face(sh, flavor).mask;
  require_simple(calc, v);
  EqMask p = mask_of(sh, {Kind::A, 1, i});
  EqMask q = mask_of(sh, {Kind::B, 1, i});
  if (swap_pq) std::swap(p, q);
  if (!(F & p)) return std::nullopt;
  return symbolic_mitosis(calc, v, 0, p, q, F);
}

// ---------------------------------------------------------------------------
// Text rendering: a dashed header for the constants, then one line per row
// indented by one column per row, cells shown as A, B, * (both) or '.'.

inline std::string render(const EquationFace& f) {
  const Shape& s = f.shape;
  std::string out;
  for (int j = 1; j <= s.n() + 1; ++j) out += j == 1 ? "-" : " -";
  for (int i = 1; i <= s.rows(); ++i) {
    out += "\n" + std::string(i, ' ');
    for (int j = 1; j <= s.row_length(i); ++j) {
      const bool a = f.has({Kind::A, i, j}), b = f.has({Kind::B, i, j});
      if (j > 1) out += " ";
      out += a && b ? '*' : a ? 'A' : b ? 'B' : '.';
    }
  }
  return out;
}

}  // namespace mitosis::gz
