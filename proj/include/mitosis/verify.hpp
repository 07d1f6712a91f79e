#pragma once

// Exhaustive sweeps comparing geometric mitosis, the equation calculus and
// the pipe-dream operators.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gz.hpp"
#include "pipedream.hpp"
#include "polykernel.hpp"
#include "schubert.hpp"
#include "weyl.hpp"

namespace mitosis::verify {

struct Report {
  long checked = 0;
  long mismatches = 0;
  std::vector<std::string> details;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++mismatches;
      if (details.size() < 50) details.push_back(what);
    }
  }
};

// Options for the mutation harness.
struct Mutation {
  pd::PrefixRule rule = pd::PrefixRule::enforced;
  bool unswapped_dual = false;
};

namespace detail_verify {

inline std::set<gz::Diagram> diagrams(const std::vector<gz::EquationFace>& fs, gz::Flavor fl) {
  std::set<gz::Diagram> out;
  for (const auto& f : fs) out.insert(gz::diagram_of(f, fl));
  return out;
}

template <class PD>
std::set<gz::Diagram> diagrams(const std::vector<PD>& ds) {
  std::set<gz::Diagram> out;
  for (const auto& D : ds) out.insert(gz::diagram_of_pipe_dream(D));
  return out;
}

inline std::vector<gz::EquationFace> geometric(const poly::FaceLattice& L, const gz::Shape& sh,
                                               int vid, gz::EqMask p, gz::EqMask q,
                                               const gz::EquationFace& F) {
  const auto r = poly::geometric_mitosis(L, L.top(), gz::face_of_mask(L, p),
                                         gz::face_of_mask(L, q), vid, gz::face_of_mask(L, F.mask));
  std::vector<gz::EquationFace> out;
  for (const auto& e : r.offsprings) out.emplace_back(sh, gz::mask_of_face(e));
  return out;
}

inline std::string describe(const gz::EquationFace& F, int i) {
  return "F=" + gz::to_string(F) + " i=" + std::to_string(i);
}

}  // namespace detail_verify

// Kogan faces with + at (1,i) and an empty column i+1: geometric M^v_i on
// GZ^A_rho against MA_i through the transpose bijection.
inline Report theorem_main(int n, Mutation mut = {}) {
  if (n > 3) throw capacity_error("geometric sweep supported for n <= 3");
  const gz::Shape sh(weyl::Type::A, n);
  const poly::FaceLattice L(gz::gz_polytope(sh, gz::rho(n)));
  const gz::EquationFace v = gz::kogan_vertex(sh);
  const int vid = L.vertex_index(gz::point_of(v, gz::rho(n)));
  Report rep;
  for (gz::EqMask m : gz::vertex_subfaces(sh, gz::Flavor::kogan)) {
    const gz::EquationFace F(sh, m);
    const gz::Diagram D = gz::diagram_of(F, gz::Flavor::kogan);
    for (int i = 1; i <= n; ++i) {
      auto has = [&](gz::GZCell c) { return std::binary_search(D.begin(), D.end(), c); };
      if (!has({1, i})) continue;
      bool column_empty = true;
      for (int k = 1; sh.has({k, i + 1}); ++k) column_empty = column_empty && !has({k, i + 1});
      if (!column_empty) continue;
      const auto geo = detail_verify::geometric(L, sh, vid, gz::mask_of(sh, {gz::Kind::A, 1, i}),
                                                gz::mask_of(sh, {gz::Kind::B, 1, i}), F);
      const auto comb = pd::mitosis_A(i, gz::to_pipe_dream_A(n, D), mut.rule);
      rep.record(detail_verify::diagrams(geo, gz::Flavor::kogan) == detail_verify::diagrams(comb),
                 detail_verify::describe(F, i));
    }
  }
  return rep;
}

// Adapted mitosis against MA_i on every reduced Kogan face; the symbolic
// path for every n given, the exact polytope as a second path when
// n <= geometric_max.
inline Report corollary_adapted(int n, int geometric_max = 3, Mutation mut = {}) {
  const gz::Shape sh(weyl::Type::A, n);
  std::optional<poly::FaceLattice> L;
  if (n <= geometric_max) L.emplace(gz::gz_polytope(sh, gz::rho(n)));
  Report rep;
  for (gz::EqMask m : gz::vertex_subfaces(sh, gz::Flavor::kogan)) {
    const gz::EquationFace F(sh, m);
    if (!gz::is_reduced_kogan(F)) continue;
    const auto D = gz::to_pipe_dream_A(n, gz::diagram_of(F, gz::Flavor::kogan));
    for (int i = 1; i <= n; ++i) {
      const auto expect = detail_verify::diagrams(pd::mitosis_A(i, D, mut.rule));
      const auto sym = gz::adapted_mitosis_A(i, F);
      bool ok = detail_verify::diagrams(sym, gz::Flavor::kogan) == expect;
      for (const auto& E : sym) ok = ok && gz::close_and_measure(E).dim == gz::close_and_measure(F).dim + 1;
      if (L) ok = ok && gz::adapted_mitosis_A_geometric(*L, i, F) == sym;
      rep.record(ok, detail_verify::describe(F, i));
    }
  }
  return rep;
}

// Symplectic Kogan faces under the hypotheses of the type C statement,
// M^v_i against M^C_{n-i+1} (i < n) or M^C_1 (i = n). The exact polytope is
// used for n = 2, the equation calculus for every n.
inline Report theorem_C(int n, Mutation mut = {}) {
  if (n > 3) throw capacity_error("type C sweep supported for n <= 3");
  const gz::Shape sh(weyl::Type::C, n);
  std::optional<poly::FaceLattice> L;
  if (n <= 2) L.emplace(gz::gz_polytope(sh, gz::rho(n)));
  const gz::EquationFace v = gz::kogan_vertex(sh);
  const int vid = L ? L->vertex_index(gz::point_of(v, gz::rho(n))) : -1;
  gz::Calculus calc(sh);
  Report rep;
  for (gz::EqMask m : gz::vertex_subfaces(sh, gz::Flavor::kogan)) {
    const gz::EquationFace F(sh, m);
    const gz::Diagram D = gz::diagram_of(F, gz::Flavor::kogan);
    auto has = [&](gz::GZCell c) { return std::binary_search(D.begin(), D.end(), c); };
    for (int i = 1; i <= n; ++i) {
      if (!has({1, i})) continue;
      bool clear = true;
      for (int k = 0; k <= n; ++k) {
        if (i < n) {
          if (sh.has({2 * k + 1, i - k + 1}) && has({2 * k + 1, i - k + 1})) clear = false;
          if (k >= 1 && sh.has({2 * k, i - k}) && has({2 * k, i - k})) clear = false;
        } else if (k >= 1 && sh.has({2 * k, n - k}) && has({2 * k, n - k})) {
          clear = false;
        }
      }
      if (!clear) continue;
      const gz::EqMask p = gz::mask_of(sh, {gz::Kind::A, 1, i});
      const gz::EqMask q = gz::mask_of(sh, {gz::Kind::B, 1, i});
      const auto sym = gz::plain_mitosis(calc, gz::Flavor::kogan, i, m, false);
      std::vector<gz::EquationFace> faces;
      for (gz::EqMask e : sym->offsprings) faces.emplace_back(sh, e);
      bool ok = true;
      if (L) {
        auto geo = detail_verify::geometric(*L, sh, vid, p, q, F);
        std::sort(geo.begin(), geo.end());
        std::vector<gz::EquationFace> sorted = faces;
        std::sort(sorted.begin(), sorted.end());
        ok = geo == sorted;
      }
      const int op = i < n ? n - i + 1 : 1;
      const auto comb = pd::mitosis_C(op, gz::to_pipe_dream_C(n, D), mut.rule);
      ok = ok && detail_verify::diagrams(faces, gz::Flavor::kogan) == detail_verify::diagrams(comb);
      rep.record(ok, detail_verify::describe(F, i));
    }
  }
  return rep;
}

// For every w in S_{n+1} and right descent i: union of MA_i over RP(w)
// equals RP(w s_i).
inline Report knutson_miller(int n, Mutation mut = {}) {
  if (n > 4) throw capacity_error("pipe dream sweep supported for n <= 4");
  Report rep;
  for (const auto& w : weyl::all_elements(weyl::Type::A, n)) {
    const auto rp = pd::enumerate_reduced_pipe_dreams(n, w);
    for (int i = 1; i <= n; ++i) {
      if (!weyl::is_right_descent(w, i)) continue;
      const auto got =
          pd::apply_to_set(rp, [&](const pd::PipeDreamA& D) { return pd::mitosis_A(i, D, mut.rule); });
      rep.record(got == pd::enumerate_reduced_pipe_dreams(n, w.times_generator(i)),
                 "w=" + w.str() + " i=" + std::to_string(i));
    }
  }
  return rep;
}

// For every w in S_{n+1} and every reduced word: S_w is independent of the
// word, matches the pipe-dream chain, has |RP(w0 w)| members and diagram
// monomials summing to the Schubert polynomial of w0 w.
inline Report schubert_sw(int n, Mutation mut = {}) {
  if (n > 3) throw capacity_error("S_w sweep supported for n <= 3");
  const weyl::Element w0 = weyl::longest(weyl::Type::A, n);
  Report rep;
  for (const auto& w : weyl::all_elements(weyl::Type::A, n)) {
    const weyl::Element u = w0 * w;
    const auto rp = pd::enumerate_reduced_pipe_dreams(n, u);
    const auto poly = schubert::schubert_polynomial(n, u);
    std::optional<std::vector<gz::EquationFace>> first;
    for (const auto& word : weyl::reduced_words(w)) {
      const auto S = schubert::generate_Sw(n, word);
      schubert::IntPolynomial sum(n + 1);
      for (const auto& f : S) sum = sum + schubert::diagram_monomial(f);
      const auto chain = schubert::pipe_dream_chain(n, word, mut.rule);
      bool ok = S.size() == rp.size() && sum == poly;
      ok = ok && detail_verify::diagrams(S, gz::Flavor::kogan) == detail_verify::diagrams(chain);
      if (!first) first = S;
      ok = ok && *first == S;
      std::string ws;
      for (int l : word) ws += std::to_string(l);
      rep.record(ok, "w=" + w.str() + " word=" + ws);
    }
  }
  return rep;
}

// The C_2 dual chains against the subword faces. The only expected
// discrepancy is one missing face for w = s2 s1.
inline Report dual_chain(Mutation mut = {}) {
  const gz::Shape sh(weyl::Type::C, 2);
  const gz::EquationFace expected_missing(
      sh, std::vector<gz::Equation>{{gz::Kind::B, 1, 1}, {gz::Kind::B, 1, 2}});
  Report rep;
  for (const auto& c : schubert::compare_dual_chain_vs_subwords(2, mut.unswapped_dual)) {
    const bool special = c.word == weyl::Word{2, 1};
    bool ok = c.extra.empty();
    if (special)
      ok = ok && c.missing == std::vector<gz::EquationFace>{expected_missing};
    else
      ok = ok && c.missing.empty();
    std::string ws = "w=";
    for (int l : c.word) ws += "s" + std::to_string(l);
    if (c.word.empty()) ws += "id";
    rep.record(ok, ws);
  }
  return rep;
}

}  // namespace mitosis::verify
