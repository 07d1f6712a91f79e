#pragma once

// Integer polynomials, divided differences and Schubert polynomials; face
// sets S_w generated by mitosis from the Kogan vertex; the dual Kogan faces
// indexed by reduced subwords of w0_bar and the dual mitosis chains in C_2.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "gz.hpp"
#include "pipedream.hpp"
#include "weyl.hpp"

namespace mitosis::schubert {

using Exponent = std::vector<int>;

class IntPolynomial {
 public:
  explicit IntPolynomial(int vars = 1) : vars_(vars) {
    detail::require(vars >= 1, "polynomial needs at least one variable");
  }

  static IntPolynomial constant(int vars, long long c) {
    IntPolynomial p(vars);
    p.add(Exponent(vars, 0), c);
    return p;
  }
  static IntPolynomial monomial(Exponent e, long long c = 1) {
    IntPolynomial p(static_cast<int>(e.size()));
    p.add(std::move(e), c);
    return p;
  }
  // x_k, 1-based
  static IntPolynomial variable(int vars, int k) {
    detail::require(k >= 1 && k <= vars, "variable index out of range");
    Exponent e(vars, 0);
    e[k - 1] = 1;
    return monomial(std::move(e));
  }

  int vars() const { return vars_; }
  const std::map<Exponent, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Exponent e, long long c) {
    detail::require(static_cast<int>(e.size()) == vars_, "exponent has wrong length");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(std::move(e), c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
  }

  IntPolynomial operator+(const IntPolynomial& o) const {
    check(o);
    IntPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add(e, c);
    return r;
  }
  IntPolynomial operator-(const IntPolynomial& o) const {
    check(o);
    IntPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add(e, -c);
    return r;
  }
  IntPolynomial operator*(const IntPolynomial& o) const {
    check(o);
    IntPolynomial r(vars_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exponent e(vars_);
        for (int k = 0; k < vars_; ++k) e[k] = e1[k] + e2[k];
        r.add(std::move(e), c1 * c2);
      }
    return r;
  }
  bool operator==(const IntPolynomial&) const = default;

  // s_i f: exchange x_i and x_{i+1}.
  IntPolynomial swapped(int i) const {
    detail::require(i >= 1 && i < vars_, "divided difference index out of range");
    IntPolynomial r(vars_);
    for (const auto& [exp, c] : terms_) {
      Exponent e = exp;
      std::swap(e[i - 1], e[i]);
      r.add(std::move(e), c);
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (int k = 0; k < vars_; ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(k + 1);
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      long long a = c;
      if (!s.empty()) {
        s += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      } else if (a < 0) {
        s += "-";
        a = -a;
      }
      if (mono.empty())
        s += std::to_string(a);
      else
        s += (a == 1 ? "" : std::to_string(a) + "*") + mono;
    }
    return s;
  }

 private:
  void check(const IntPolynomial& o) const {
    detail::require(vars_ == o.vars_, "polynomials in different rings");
  }

  int vars_;
  std::map<Exponent, long long> terms_;
};

// (f - s_i f) / (x_i - x_{i+1}), monomial by monomial.
inline IntPolynomial divided_difference(int i, const IntPolynomial& f) {
  detail::require(i >= 1 && i < f.vars(), "divided difference index out of range");
  IntPolynomial r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    const int p = e[i - 1], q = e[i];
    if (p == q) continue;
    const int hi = std::max(p, q), lo = std::min(p, q);
    const long long sign = p > q ? 1 : -1;
    for (int k = 0; k < hi - lo; ++k) {
      Exponent t = e;
      t[i - 1] = hi - 1 - k;
      t[i] = lo + k;
      r.add(std::move(t), sign * c);
    }
  }
  return r;
}

inline IntPolynomial staircase(int n) {
  Exponent e(n + 1, 0);
  for (int k = 0; k < n; ++k) e[k] = n - k;
  return IntPolynomial::monomial(std::move(e));
}

// delta_{a_1} ... delta_{a_k} applied to the staircase, where word is a
// reduced word of w^{-1} w0.
inline IntPolynomial schubert_polynomial_via(int n, const weyl::Element& w, const weyl::Word& word) {
  detail::require(w.type() == weyl::Type::A && w.rank() == n, "permutation in wrong group");
  const weyl::Element u = w.inverse() * weyl::longest(weyl::Type::A, n);
  detail::require(weyl::is_reduced(weyl::Type::A, n, word) &&
                      weyl::evaluate(weyl::Type::A, n, word) == u,
                  "word is not a reduced word of w^-1 w0");
  IntPolynomial f = staircase(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = divided_difference(*it, f);
  return f;
}

inline IntPolynomial schubert_polynomial(int n, const weyl::Element& w) {
  const weyl::Element u = w.inverse() * weyl::longest(weyl::Type::A, n);
  return schubert_polynomial_via(n, w, weyl::reduced_word(u));
}

// prod over crosses of x_row
inline IntPolynomial monomial_of(const pd::PipeDreamA& D) {
  Exponent e(D.n() + 1, 0);
  for (const auto& c : D.crosses()) ++e[c.row - 1];
  return IntPolynomial::monomial(std::move(e));
}

inline IntPolynomial pipe_dream_sum(const std::vector<pd::PipeDreamA>& ds, int n) {
  IntPolynomial f(n + 1);
  for (const auto& D : ds) f = f + monomial_of(D);
  return f;
}

// ---------------------------------------------------------------------------
// S_w in type A

// M_{i_l} ... M_{i_1}(v) with adapted mitosis, i_1 applied first.
inline std::vector<gz::EquationFace> generate_Sw(int n, const weyl::Word& word) {
  if (!weyl::is_reduced(weyl::Type::A, n, word)) throw domain_error("word is not reduced");
  const gz::Shape sh(weyl::Type::A, n);
  std::set<gz::EquationFace> cur{gz::kogan_vertex(sh)};
  for (int i : word) {
    std::set<gz::EquationFace> next;
    for (const auto& F : cur)
      for (auto& E : gz::adapted_mitosis_A(i, F)) next.insert(std::move(E));
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

// Same chain run on pipe dreams, starting from the full staircase.
inline std::vector<pd::PipeDreamA> pipe_dream_chain(int n, const weyl::Word& word,
                                                    pd::PrefixRule rule = pd::PrefixRule::enforced) {
  std::vector<pd::PipeDreamA> cur{pd::PipeDreamA(n, pd::region_cells(pd::Family::A, n))};
  for (int i : word)
    cur = pd::apply_to_set(cur, [&](const pd::PipeDreamA& D) { return pd::mitosis_A(i, D, rule); });
  return cur;
}

// x_j raised to the number of + in GZ column j.
inline IntPolynomial diagram_monomial(const gz::EquationFace& f) {
  Exponent e(f.shape.n() + 1, 0);
  for (const auto& c : gz::diagram_of(f, gz::Flavor::kogan)) ++e[c.j - 1];
  return IntPolynomial::monomial(std::move(e));
}

// ---------------------------------------------------------------------------
// Dual Kogan faces in type C

// Cells of the C_n pattern in the order the letters of w0_bar are written:
// rows from 2n-1 up to 1, odd rows right to left, even rows left to right.
inline std::vector<gz::GZCell> dual_inscription(int n) {
  const gz::Shape sh(weyl::Type::C, n);
  std::vector<gz::GZCell> out;
  for (int i = sh.rows(); i >= 1; --i) {
    const int len = sh.row_length(i);
    for (int t = 0; t < len; ++t) out.push_back({i, i % 2 ? len - t : t + 1});
  }
  return out;
}

// Kept letters give B on odd rows and A on even rows.
inline gz::EquationFace dual_subword_face(int n, const weyl::Positions& kept) {
  const gz::Shape sh(weyl::Type::C, n);
  const auto cells = dual_inscription(n);
  gz::EqMask m = 0;
  int prev = 0;
  for (int p : kept) {
    if (p <= prev || p > static_cast<int>(cells.size()))
      throw domain_error("positions must be strictly increasing within 1..n^2");
    prev = p;
    m |= gz::flavor_mask(sh, gz::Flavor::dual, cells[p - 1]);
  }
  return {sh, m};
}

inline std::vector<gz::EquationFace> dual_faces(int n, const weyl::Element& w) {
  detail::require(w.type() == weyl::Type::C && w.rank() == n, "signed permutation in wrong group");
  if (n > 4) throw capacity_error("dual face count supported for n <= 4");
  const weyl::Element target = weyl::longest(weyl::Type::C, n) * w;
  std::set<gz::EquationFace> out;
  for (const auto& S : weyl::reduced_subwords(weyl::Type::C, n, weyl::w0_bar(n), target))
    out.insert(dual_subword_face(n, S));
  return {out.begin(), out.end()};
}

inline int dual_face_count(int n, const weyl::Element& w) {
  return static_cast<int>(dual_faces(n, w).size());
}

// M^{v*}_i: P = {x^1_i = lambda_{i+1}}, Q = {x^1_i = lambda_i}. With
// `unswapped` the roles are the ones of M^v_i. Faces outside P have no
// offsprings.
inline std::vector<gz::EquationFace> dual_mitosis_C(int i, const gz::EquationFace& F,
                                                    bool unswapped = false) {
  detail::require(F.shape.type() == weyl::Type::C, "dual mitosis is defined in type C");
  gz::Calculus calc(F.shape);
  const auto r = gz::plain_mitosis(calc, gz::Flavor::dual, i, F.mask, !unswapped);
  std::vector<gz::EquationFace> out;
  if (!r) return out;
  for (gz::EqMask m : r->offsprings) out.emplace_back(F.shape, m);
  std::sort(out.begin(), out.end());
  return out;
}

// Adapted dual operator for the last row: mitosis inside the face cut out by
// the equations of F above row 2n-1, with P = B(2n-1,1), Q = A(2n-1,1).
inline std::vector<gz::EquationFace> adapted_dual_mitosis_C(const gz::EquationFace& F,
                                                            bool unswapped = false) {
  const gz::Shape& sh = F.shape;
  detail::require(sh.type() == weyl::Type::C, "dual mitosis is defined in type C");
  gz::Calculus calc(sh);
  const gz::EqMask v = gz::vertex_face(sh, gz::Flavor::dual).mask;
  gz::require_simple(calc, v);
  const int last = sh.rows();
  gz::EqMask bottom = 0;
  for (int j = 1; j <= sh.row_length(last); ++j)
    bottom |= gz::mask_of(sh, {gz::Kind::A, last, j}) | gz::mask_of(sh, {gz::Kind::B, last, j});
  gz::EqMask p = gz::mask_of(sh, {gz::Kind::B, last, 1});
  gz::EqMask q = gz::mask_of(sh, {gz::Kind::A, last, 1});
  if (unswapped) std::swap(p, q);
  std::vector<gz::EquationFace> out;
  if (!(F.mask & p)) return out;
  const auto r = gz::symbolic_mitosis(calc, v, F.mask & ~bottom, p, q, F.mask);
  for (gz::EqMask m : r.offsprings) out.emplace_back(sh, m);
  std::sort(out.begin(), out.end());
  return out;
}

// One step of a dual chain: index i of M^{v*}_i, or the adapted operator.
struct DualStep {
  int i;
  bool adapted = false;
};

// The chains of the C_2 figure, keyed by the word of w (letter n - i + 1 per
// step).
inline std::vector<std::pair<weyl::Word, std::vector<DualStep>>> dual_chains_C2() {
  return {
      {{}, {}},
      {{2}, {{1}}},
      {{2, 1}, {{1}, {2}}},
      {{2, 1, 2}, {{1}, {2}, {1}}},
      {{1}, {{2, true}}},
      {{1, 2}, {{2, true}, {1}}},
      {{1, 2, 1}, {{2, true}, {1}, {2}}},
      {{2, 1, 2, 1}, {{1}, {2}, {1}, {2}}},
  };
}

inline std::vector<gz::EquationFace> dual_step(const DualStep& st,
                                               const std::vector<gz::EquationFace>& faces,
                                               bool unswapped = false) {
  std::set<gz::EquationFace> next;
  for (const auto& F : faces) {
    auto kids = st.adapted ? adapted_dual_mitosis_C(F, unswapped) : dual_mitosis_C(st.i, F, unswapped);
    next.insert(kids.begin(), kids.end());
  }
  return {next.begin(), next.end()};
}

// All steps applied in turn, starting from v*.
inline std::vector<gz::EquationFace> run_dual_chain(int n, const std::vector<DualStep>& steps,
                                                    bool unswapped = false) {
  std::vector<gz::EquationFace> cur{gz::dual_kogan_vertex(n)};
  for (const auto& st : steps) cur = dual_step(st, cur, unswapped);
  return cur;
}

struct DualComparison {
  weyl::Word word;
  // last step applied to the subword faces of the prefix
  std::vector<gz::EquationFace> chain;
  // every step applied to the output of the previous one
  std::vector<gz::EquationFace> cumulative;
  std::vector<gz::EquationFace> subwords;
  std::vector<gz::EquationFace> missing;  // in subwords, not in chain
  std::vector<gz::EquationFace> extra;    // in chain, not in subwords
};

inline std::vector<DualComparison> compare_dual_chain_vs_subwords(int n, bool unswapped = false) {
  detail::require(n == 2, "dual chains are tabulated for n = 2");
  std::vector<DualComparison> out;
  for (const auto& [word, steps] : dual_chains_C2()) {
    DualComparison c;
    c.word = word;
    c.cumulative = run_dual_chain(n, steps, unswapped);
    if (steps.empty()) {
      c.chain = c.cumulative;
    } else {
      const weyl::Word prefix(word.begin(), word.end() - 1);
      c.chain = dual_step(steps.back(), dual_faces(n, weyl::evaluate(weyl::Type::C, n, prefix)),
                          unswapped);
    }
    c.subwords = dual_faces(n, weyl::evaluate(weyl::Type::C, n, word));
    std::set_difference(c.subwords.begin(), c.subwords.end(), c.chain.begin(), c.chain.end(),
                        std::back_inserter(c.missing));
    std::set_difference(c.chain.begin(), c.chain.end(), c.subwords.begin(), c.subwords.end(),
                        std::back_inserter(c.extra));
    out.push_back(std::move(c));
  }
  return out;
}

namespace experimental {

// Type C analogue of generate_Sw using M^v_{n-i+1} on the whole polytope
// around the symplectic Kogan vertex. Not validated.
inline std::vector<gz::EquationFace> generate_Sw_C(int n, const weyl::Word& word) {
  if (!weyl::is_reduced(weyl::Type::C, n, word)) throw domain_error("word is not reduced");
  const gz::Shape sh(weyl::Type::C, n);
  gz::Calculus calc(sh);
  std::set<gz::EquationFace> cur{gz::kogan_vertex(sh)};
  for (int letter : word) {
    std::set<gz::EquationFace> next;
    for (const auto& F : cur) {
      const auto r = gz::plain_mitosis(calc, gz::Flavor::kogan, n - letter + 1, F.mask, false);
      if (!r) continue;
      for (gz::EqMask m : r->offsprings) next.emplace(sh, m);
    }
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

}  // namespace experimental
}  // namespace mitosis::schubert
