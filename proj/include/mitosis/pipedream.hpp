#pragma once

// Pipe dreams of type A_n, skew pipe dreams of type C_n, two-row mitosis and
// the mitosis operators built on it.

#include <algorithm>
#include <compare>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "weyl.hpp"

namespace mitosis::pd {

struct Cell {
  int row;
  int col;
  auto operator<=>(const Cell&) const = default;
};

// ---------------------------------------------------------------------------
// Two-row mitosis

// Squares a1..a(l+1) and b1..bl, true meaning "holds a +".
struct BasicPipeDream {
  std::vector<bool> a;
  std::vector<bool> b;

  BasicPipeDream() : a(1, false) {}
  BasicPipeDream(std::vector<bool> a_row, std::vector<bool> b_row)
      : a(std::move(a_row)), b(std::move(b_row)) {
    detail::require(a.size() == b.size() + 1, "a-row must be one square longer than b-row");
  }

  // Build from 1-based lists of filled squares.
  static BasicPipeDream from_filled(int ell, const std::vector<int>& a_filled,
                                    const std::vector<int>& b_filled) {
    detail::require(ell >= 0, "ell must be non-negative");
    std::vector<bool> a(ell + 1, false), b(ell, false);
    for (int k : a_filled) {
      detail::require(k >= 1 && k <= ell + 1, "a-square index out of range");
      a[k - 1] = true;
    }
    for (int k : b_filled) {
      detail::require(k >= 1 && k <= ell, "b-square index out of range");
      b[k - 1] = true;
    }
    return {std::move(a), std::move(b)};
  }

  int ell() const { return static_cast<int>(b.size()); }
  int size() const {
    return static_cast<int>(std::count(a.begin(), a.end(), true) +
                            std::count(b.begin(), b.end(), true));
  }

  std::vector<int> filled_a() const { return filled(a); }
  std::vector<int> filled_b() const { return filled(b); }

  bool operator==(const BasicPipeDream&) const = default;
  auto operator<=>(const BasicPipeDream& o) const {
    if (auto c = filled_a() <=> o.filled_a(); c != 0) return c;
    return filled_b() <=> o.filled_b();
  }

 private:
  static std::vector<int> filled(const std::vector<bool>& row) {
    std::vector<int> out;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k]) out.push_back(static_cast<int>(k) + 1);
    return out;
  }
};

// `dropped` removes the j <= r_D condition from J(D); it exists only as a
// mutation for the verification harness.
enum class PrefixRule { enforced, dropped };

struct TwoRowResult {
  int r = 0;                 // r_D, 0 when a1 is empty
  std::vector<int> J;        // ascending
  std::vector<BasicPipeDream> offsprings;  // ascending p
};

inline TwoRowResult two_row_mitosis(const BasicPipeDream& D,
                                    PrefixRule rule = PrefixRule::enforced) {
  TwoRowResult out;
  if (!D.a[0]) return out;
  const int ell = D.ell();
  while (out.r < ell + 1 && D.a[out.r]) ++out.r;
  for (int j = 1; j <= ell + 1; ++j) {
    if (rule == PrefixRule::enforced && j > out.r) break;
    if (D.a[j - 1] && (j == ell + 1 || !D.b[j - 1])) out.J.push_back(j);
  }
  for (int p : out.J) {
    BasicPipeDream child = D;
    child.a[p - 1] = false;
    for (int j : out.J) {
      if (j >= p) break;
      child.a[j - 1] = false;
      child.b[j - 1] = true;
    }
    out.offsprings.push_back(std::move(child));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pipe dreams

enum class Family { A, C };

inline bool in_region(Family family, int n, Cell c) {
  if (c.row < 1 || c.col < 1) return false;
  if (family == Family::A) return c.row + c.col <= n + 1;
  return c.row <= c.col && c.row + c.col <= 2 * n;
}

inline int region_width(Family family, int n) { return family == Family::A ? n : 2 * n - 1; }

inline std::vector<Cell> region_cells(Family family, int n) {
  std::vector<Cell> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= region_width(family, n); ++j)
      if (in_region(family, n, {i, j})) out.push_back({i, j});
  return out;
}

template <Family F>
class PipeDream {
 public:
  static constexpr Family family = F;

  explicit PipeDream(int n, std::vector<Cell> crosses = {}) : n_(n), crosses_(std::move(crosses)) {
    detail::require(n >= 1, "pipe dream rank must be positive");
    std::sort(crosses_.begin(), crosses_.end());
    crosses_.erase(std::unique(crosses_.begin(), crosses_.end()), crosses_.end());
    for (Cell c : crosses_)
      if (!in_region(F, n, c))
        throw domain_error("cross (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                           ") outside the allowed region");
  }

  int n() const { return n_; }
  const std::vector<Cell>& crosses() const { return crosses_; }
  int size() const { return static_cast<int>(crosses_.size()); }
  bool has(Cell c) const { return std::binary_search(crosses_.begin(), crosses_.end(), c); }

  PipeDream with(const std::vector<Cell>& remove, const std::vector<Cell>& add) const {
    std::vector<Cell> next;
    for (Cell c : crosses_)
      if (std::find(remove.begin(), remove.end(), c) == remove.end()) next.push_back(c);
    next.insert(next.end(), add.begin(), add.end());
    return PipeDream(n_, std::move(next));
  }

  bool operator==(const PipeDream&) const = default;
  auto operator<=>(const PipeDream& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return crosses_ <=> o.crosses_;
  }

 private:
  int n_;
  std::vector<Cell> crosses_;
};

using PipeDreamA = PipeDream<Family::A>;
using SkewPipeDreamC = PipeDream<Family::C>;

// Labels of the a- and b-squares used by one mitosis operator.
struct SquareLabels {
  std::vector<Cell> a;
  std::vector<Cell> b;
};

inline SquareLabels labels_A(int n, int i) {
  if (i < 1 || i > n) throw domain_error("mitosis index out of range 1..n");
  SquareLabels s;
  for (int k = 1; k <= n - i + 1; ++k) s.a.push_back({i, k});
  for (int k = 1; k <= n - i; ++k) s.b.push_back({i + 1, k});
  return s;
}

inline SquareLabels labels_C(int n, int i) {
  if (i < 1 || i > n) throw domain_error("mitosis index out of range 1..n");
  SquareLabels s;
  if (i == 1) {
    for (int k = 1; k <= n; ++k) s.a.push_back({k, n});
    for (int k = 1; k <= n - 1; ++k) s.b.push_back({k, n + 1});
    return s;
  }
  for (int k = 1; k <= n - i + 1; ++k) {
    s.a.push_back({k, n - i + 1});
    s.a.push_back({k, n + i - 1});
  }
  for (int k = 1; k <= n - i + 1; ++k) {
    s.b.push_back({k, n - i + 2});
    if (k <= n - i) s.b.push_back({k, n + i});
  }
  return s;
}

template <Family F>
BasicPipeDream extract(const PipeDream<F>& D, const SquareLabels& s) {
  std::vector<bool> a, b;
  for (Cell c : s.a) a.push_back(D.has(c));
  for (Cell c : s.b) b.push_back(D.has(c));
  return {std::move(a), std::move(b)};
}

template <Family F>
PipeDream<F> splice(const PipeDream<F>& D, const SquareLabels& s, const BasicPipeDream& part) {
  std::vector<Cell> remove(s.a);
  remove.insert(remove.end(), s.b.begin(), s.b.end());
  std::vector<Cell> add;
  for (std::size_t k = 0; k < s.a.size(); ++k)
    if (part.a[k]) add.push_back(s.a[k]);
  for (std::size_t k = 0; k < s.b.size(); ++k)
    if (part.b[k]) add.push_back(s.b[k]);
  return D.with(remove, add);
}

template <Family F>
std::vector<PipeDream<F>> apply_labels(const PipeDream<F>& D, const SquareLabels& s,
                                       PrefixRule rule) {
  const TwoRowResult res = two_row_mitosis(extract(D, s), rule);
  std::vector<PipeDream<F>> out;
  for (const auto& child : res.offsprings) out.push_back(splice(D, s, child));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<PipeDreamA> mitosis_A(int i, const PipeDreamA& D,
                                         PrefixRule rule = PrefixRule::enforced) {
  return apply_labels(D, labels_A(D.n(), i), rule);
}

inline std::vector<SkewPipeDreamC> mitosis_C(int i, const SkewPipeDreamC& D,
                                             PrefixRule rule = PrefixRule::enforced) {
  return apply_labels(D, labels_C(D.n(), i), rule);
}

// Union of the operator over a set, canonically ordered.
template <Family F, class Op>
std::vector<PipeDream<F>> apply_to_set(const std::vector<PipeDream<F>>& in, Op op) {
  std::set<PipeDream<F>> acc;
  for (const auto& D : in)
    for (auto& child : op(D)) acc.insert(std::move(child));
  return {acc.begin(), acc.end()};
}

// ---------------------------------------------------------------------------
// Words, permutations, enumeration

struct ReadWord {
  weyl::Word word;
  bool reduced;
};

// Rows top to bottom, each row right to left; a cross at (i,j) reads s_{i+j-1}.
inline ReadWord word_of(const PipeDreamA& D) {
  ReadWord out;
  for (int i = 1; i <= D.n(); ++i)
    for (int j = D.n() + 1 - i; j >= 1; --j)
      if (D.has({i, j})) out.word.push_back(i + j - 1);
  out.reduced = weyl::is_reduced(weyl::Type::A, D.n(), out.word);
  return out;
}

inline weyl::Element permutation_of(const PipeDreamA& D) {
  return weyl::evaluate(weyl::Type::A, D.n(), word_of(D).word);
}

inline bool is_reduced(const PipeDreamA& D) { return word_of(D).reduced; }

// Exhaustive scan of all cross-sets of size length(w) in the staircase.
inline std::vector<PipeDreamA> enumerate_reduced_pipe_dreams(int n, const weyl::Element& w) {
  detail::require(w.type() == weyl::Type::A && w.rank() == n, "w must lie in S_{n+1}");
  const auto cells = region_cells(Family::A, n);
  if (cells.size() > 21) throw capacity_error("staircase too large for exhaustive enumeration");
  const int want = weyl::length(w);
  std::vector<PipeDreamA> out;
  for (unsigned long mask = 0; mask < (1ul << cells.size()); ++mask) {
    if (__builtin_popcountl(mask) != want) continue;
    std::vector<Cell> cr;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (mask & (1ul << k)) cr.push_back(cells[k]);
    PipeDreamA D(n, std::move(cr));
    const auto rw = word_of(D);
    if (rw.reduced && weyl::evaluate(weyl::Type::A, n, rw.word) == w) out.push_back(std::move(D));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Text form: '+' cross, '.' allowed and empty, ' ' outside the region;
// cells separated by one space, trailing blanks trimmed, no final newline.

template <Family F>
std::string render(const PipeDream<F>& D) {
  std::string out;
  for (int i = 1; i <= D.n(); ++i) {
    std::string line;
    for (int j = 1; j <= region_width(F, D.n()); ++j) {
      if (j > 1) line += ' ';
      if (!in_region(F, D.n(), {i, j}))
        line += ' ';
      else
        line += D.has({i, j}) ? '+' : '.';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    if (i > 1) out += '\n';
    out += line;
  }
  return out;
}

template <Family F>
PipeDream<F> parse(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw format_error("empty pipe dream text");
  const int n = static_cast<int>(lines.size());
  const int width = region_width(F, n);
  std::vector<Cell> crosses;
  for (int i = 1; i <= n; ++i) {
    const std::string& line = lines[i - 1];
    if (static_cast<int>(line.size()) > 2 * width - 1)
      throw format_error("line " + std::to_string(i) + " is too long");
    for (std::size_t k = 0; k < line.size(); ++k) {
      const char ch = line[k];
      if (k % 2 == 1) {
        if (ch != ' ') throw format_error("expected a separator at line " + std::to_string(i));
        continue;
      }
      const Cell c{i, static_cast<int>(k / 2) + 1};
      const bool allowed = in_region(F, n, c);
      if (ch == ' ' && !allowed) continue;
      if (!allowed || (ch != '+' && ch != '.'))
        throw format_error("bad symbol '" + std::string(1, ch) + "' at line " +
                           std::to_string(i));
      if (ch == '+') crosses.push_back(c);
    }
    for (int j = static_cast<int>(line.size() + 1) / 2 + 1; j <= width; ++j)
      if (in_region(F, n, {i, j}))
        throw format_error("line " + std::to_string(i) + " is too short");
  }
  return PipeDream<F>(n, std::move(crosses));
}

// Two lines of squares: the a-row, then the b-row.
inline std::string render(const BasicPipeDream& D) {
  std::string top, bottom;
  for (std::size_t k = 0; k < D.a.size(); ++k) {
    if (k) top += ' ';
    top += D.a[k] ? '+' : '.';
  }
  for (std::size_t k = 0; k < D.b.size(); ++k) {
    if (k) bottom += ' ';
    bottom += D.b[k] ? '+' : '.';
  }
  return top + "\n" + bottom;
}

}  // namespace mitosis::pd
