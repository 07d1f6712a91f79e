#pragma once

// Coxeter-group combinatorics for type A_n (the symmetric group S_{n+1})
// and type C_n (signed permutations B_n).
//
// Conventions, fixed once for the whole library:
//   * elements are stored in one-line notation, w = (w(1), ..., w(m));
//   * type A generator s_i swaps i and i+1 (1 <= i <= n);
//   * type C generator s_1 changes the sign of 1, s_i (i >= 2) swaps i-1, i;
//   * evaluate([i_1, ..., i_l]) is the product s_{i_1} * ... * s_{i_l} of
//     functions, so right multiplication by s_i acts on positions.

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"

namespace mitosis::weyl {

enum class Type { A, C };

using Word = std::vector<int>;

inline int degree(Type type, int rank) { return type == Type::A ? rank + 1 : rank; }

class Element {
 public:
  Element(Type type, int rank, std::vector<int> one_line)
      : type_(type), rank_(rank), one_line_(std::move(one_line)) {
    detail::require(rank >= 1, "rank must be positive");
    const int m = degree(type, rank);
    detail::require(static_cast<int>(one_line_.size()) == m,
                    "one-line notation has wrong length");
    std::vector<bool> seen(m + 1, false);
    for (int x : one_line_) {
      const int a = std::abs(x);
      detail::require(a >= 1 && a <= m && !seen[a], "not a (signed) permutation");
      detail::require(type == Type::C || x > 0, "negative entry in a permutation");
      seen[a] = true;
    }
  }

  static Element identity(Type type, int rank) {
    std::vector<int> v(degree(type, rank));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = static_cast<int>(k) + 1;
    return Element(type, rank, std::move(v));
  }

  Type type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<int>& one_line() const { return one_line_; }

  // w(k) for 1 <= |k| <= m, extended by w(-k) = -w(k).
  int operator()(int k) const {
    const int v = one_line_[std::abs(k) - 1];
    return k < 0 ? -v : v;
  }

  Element times_generator(int i) const {
    check_letter(type_, rank_, i);
    Element r = *this;
    if (type_ == Type::A) {
      std::swap(r.one_line_[i - 1], r.one_line_[i]);
    } else if (i == 1) {
      r.one_line_[0] = -r.one_line_[0];
    } else {
      std::swap(r.one_line_[i - 2], r.one_line_[i - 1]);
    }
    return r;
  }

  Element operator*(const Element& other) const {
    detail::require(type_ == other.type_ && rank_ == other.rank_, "mismatched groups");
    std::vector<int> v(one_line_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = (*this)(other.one_line_[k]);
    return Element(type_, rank_, std::move(v));
  }

  Element inverse() const {
    std::vector<int> v(one_line_.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      const int x = one_line_[k];
      const int pos = static_cast<int>(k) + 1;
      v[std::abs(x) - 1] = x > 0 ? pos : -pos;
    }
    return Element(type_, rank_, std::move(v));
  }

  bool operator==(const Element&) const = default;
  auto operator<=>(const Element& o) const {
    if (auto c = type_ <=> o.type_; c != 0) return c;
    if (auto c = rank_ <=> o.rank_; c != 0) return c;
    return one_line_ <=> o.one_line_;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < one_line_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(one_line_[k]);
    }
    return s + ")";
  }

  static void check_letter(Type type, int rank, int letter) {
    (void)type;
    if (letter < 1 || letter > rank)
      throw domain_error("generator index " + std::to_string(letter) +
                         " out of range 1.." + std::to_string(rank));
  }

 private:
  Type type_;
  int rank_;
  std::vector<int> one_line_;
};

inline Element permutation(std::vector<int> one_line) {
  const int rank = static_cast<int>(one_line.size()) - 1;
  return Element(Type::A, rank, std::move(one_line));
}

inline Element signed_permutation(std::vector<int> images) {
  const int rank = static_cast<int>(images.size());
  return Element(Type::C, rank, std::move(images));
}

inline void check_word(Type type, int rank, const Word& word) {
  for (int letter : word) Element::check_letter(type, rank, letter);
}

inline Element evaluate(Type type, int rank, const Word& word) {
  check_word(type, rank, word);
  Element w = Element::identity(type, rank);
  for (int letter : word) w = w.times_generator(letter);
  return w;
}

// Coxeter length: inversions in type A; in type C
// inv(w) + sum of |w(j)| over negative entries.
inline int length(const Element& w) {
  const auto& v = w.one_line();
  int len = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++len;
  if (w.type() == Type::C)
    for (int x : v)
      if (x < 0) len -= x;
  return len;
}

inline bool is_reduced(Type type, int rank, const Word& word) {
  return length(evaluate(type, rank, word)) == static_cast<int>(word.size());
}

// True iff length(w s_i) < length(w).
inline bool is_right_descent(const Element& w, int i) {
  return length(w.times_generator(i)) < length(w);
}

inline Element longest(Type type, int rank) {
  std::vector<int> v(degree(type, rank));
  const int m = static_cast<int>(v.size());
  for (int k = 0; k < m; ++k) v[k] = type == Type::A ? m - k : -(k + 1);
  return Element(type, rank, std::move(v));
}

// (s_1)(s_2 s_1 s_2)(s_3 s_2 s_1 s_2 s_3)...(s_n ... s_2 s_1 s_2 ... s_n)
inline Word w0_bar(int n) {
  detail::require(n >= 1, "w0_bar needs n >= 1");
  Word w;
  for (int block = 1; block <= n; ++block) {
    for (int k = block; k >= 1; --k) w.push_back(k);
    for (int k = 2; k <= block; ++k) w.push_back(k);
  }
  return w;
}

inline std::vector<Element> all_elements(Type type, int rank) {
  const int m = degree(type, rank);
  std::vector<int> base(m);
  for (int k = 0; k < m; ++k) base[k] = k + 1;
  std::vector<Element> out;
  do {
    if (type == Type::A) {
      out.emplace_back(type, rank, base);
    } else {
      for (unsigned signs = 0; signs < (1u << m); ++signs) {
        std::vector<int> v = base;
        for (int k = 0; k < m; ++k)
          if (signs & (1u << k)) v[k] = -v[k];
        out.emplace_back(type, rank, std::move(v));
      }
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// All reduced words of w, lexicographically sorted.
inline std::vector<Word> reduced_words(const Element& w) {
  std::map<Element, std::vector<Word>> memo;
  auto rec = [&](auto&& self, const Element& u) -> const std::vector<Word>& {
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    std::vector<Word> words;
    if (length(u) == 0) {
      words.push_back({});
    } else {
      for (int i = 1; i <= u.rank(); ++i) {
        if (!is_right_descent(u, i)) continue;
        for (Word prefix : self(self, u.times_generator(i))) {
          prefix.push_back(i);
          words.push_back(std::move(prefix));
        }
      }
    }
    std::sort(words.begin(), words.end());
    return memo.emplace(u, std::move(words)).first->second;
  };
  return rec(rec, w);
}

// One reduced word, built by peeling right descents.
inline Word reduced_word(const Element& w) {
  Word word;
  Element u = w;
  while (length(u) > 0) {
    for (int i = 1; i <= u.rank(); ++i) {
      if (is_right_descent(u, i)) {
        word.push_back(i);
        u = u.times_generator(i);
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

using Positions = std::vector<int>;  // 1-based, ascending

// All position subsets S of host whose subword is reduced and evaluates to
// target. Exhaustive over 2^|host|.
inline std::vector<Positions> reduced_subwords(Type type, int rank, const Word& host,
                                               const Element& target) {
  check_word(type, rank, host);
  detail::require(target.type() == type && target.rank() == rank, "target in wrong group");
  if (host.size() > 24) throw capacity_error("host word longer than 24 letters");
  const int want = length(target);
  std::set<Positions> out;
  const unsigned long total = 1ul << host.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    if (__builtin_popcountl(mask) != want) continue;
    Element w = Element::identity(type, rank);
    Positions pos;
    for (std::size_t k = 0; k < host.size(); ++k) {
      if (mask & (1ul << k)) {
        w = w.times_generator(host[k]);
        pos.push_back(static_cast<int>(k) + 1);
      }
    }
    if (w == target) out.insert(std::move(pos));
  }
  return {out.begin(), out.end()};
}

inline Word subword(const Word& host, const Positions& positions) {
  Word w;
  for (int p : positions) {
    detail::require(p >= 1 && p <= static_cast<int>(host.size()), "position out of range");
    w.push_back(host[p - 1]);
  }
  return w;
}

}  // namespace mitosis::weyl
