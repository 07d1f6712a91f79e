#pragma once

// Exact-rational polyhedral kernel: H-polytopes, brute-force vertex
// enumeration, convex hulls by double description, face lattices keyed by
// closed tight sets, Cayley sums, admissible faces and simple geometric
// mitosis.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace mitosis::poly {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using Vector = std::vector<Rational>;
using Point = Vector;
using Bits = boost::dynamic_bitset<>;

inline constexpr int kMaxDim = 12;
inline constexpr int kMaxRows = 24;
inline constexpr double kMaxSubsets = 2.0e6;

// a . x <= b
struct Row {
  Vector a;
  Rational b;
  std::string label;
};

inline Rational dot(const Vector& u, const Vector& v) {
  Rational s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
  return s;
}

// Scale (a, b) by a positive factor to coprime integers.
inline Row normalize(Row r) {
  Integer den = 1;
  auto lcm_in = [&](const Rational& q) {
    const Integer d = boost::multiprecision::denominator(q);
    den = boost::multiprecision::lcm(den, d);
  };
  for (const auto& x : r.a) lcm_in(x);
  lcm_in(r.b);
  Integer g = 0;
  auto gcd_in = [&](const Rational& q) {
    const Integer v = boost::multiprecision::numerator(Rational(q * den));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v));
  };
  for (const auto& x : r.a) gcd_in(x);
  gcd_in(r.b);
  if (g == 0) return r;
  const Rational scale = Rational(den) / Rational(g);
  for (auto& x : r.a) x *= scale;
  r.b *= scale;
  return r;
}

inline int rank_of(std::vector<Vector> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Affine dimension of a point set (-1 when empty).
inline int affine_dimension(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  std::vector<Vector> diffs;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    Vector d(pts[k].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = pts[k][c] - pts[0][c];
    diffs.push_back(std::move(d));
  }
  return rank_of(std::move(diffs));
}

class HPolytope {
 public:
  HPolytope(int dim, std::vector<Row> rows) : dim_(dim) {
    detail::require(dim >= 1, "ambient dimension must be positive");
    for (auto& r : rows) {
      detail::require(static_cast<int>(r.a.size()) == dim, "row has wrong length");
      detail::require(std::any_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x != 0; }),
                      "row has a zero normal vector");
      rows_.push_back(normalize(std::move(r)));
    }
  }

  int dim() const { return dim_; }
  const std::vector<Row>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }

  int find(const std::string& label) const {
    for (int k = 0; k < row_count(); ++k)
      if (rows_[k].label == label) return k;
    throw domain_error("no row labelled '" + label + "'");
  }

  bool contains(const Point& x) const {
    for (const auto& r : rows_)
      if (dot(r.a, x) > r.b) return false;
    return true;
  }

  bool tight(int row, const Point& x) const { return dot(rows_[row].a, x) == rows_[row].b; }

 private:
  int dim_;
  std::vector<Row> rows_;
};

namespace detail_vertex {

// Depth-first scan over row subsets of size d, keeping the chosen rows in
// reduced row-echelon form so that dependent prefixes are pruned.
struct Scanner {
  const std::vector<Row>& rows;
  int d;
  std::set<Point> found;

  struct Echelon {
    std::vector<Vector> m;  // augmented [a | b], RREF
    std::vector<int> pivots;
  };

  void run() {
    Echelon e;
    descend(e, 0);
  }

  void descend(const Echelon& e, int start) {
    const int depth = static_cast<int>(e.m.size());
    if (depth == d) {
      Point x(d);
      for (int k = 0; k < d; ++k) x[e.pivots[k]] = e.m[k][d];
      for (const auto& r : rows)
        if (dot(r.a, x) > r.b) return;
      found.insert(std::move(x));
      return;
    }
    const int n = static_cast<int>(rows.size());
    for (int idx = start; idx <= n - (d - depth); ++idx) {
      Vector v = rows[idx].a;
      v.push_back(rows[idx].b);
      for (int k = 0; k < depth; ++k) {
        const Rational f = v[e.pivots[k]];
        if (f == 0) continue;
        for (int c = 0; c <= d; ++c) v[c] -= f * e.m[k][c];
      }
      int piv = -1;
      for (int c = 0; c < d; ++c)
        if (v[c] != 0) {
          piv = c;
          break;
        }
      if (piv < 0) continue;
      const Rational inv = 1 / v[piv];
      for (auto& x : v) x *= inv;
      Echelon next = e;
      for (auto& row : next.m) {
        const Rational f = row[piv];
        if (f == 0) continue;
        for (int c = 0; c <= d; ++c) row[c] -= f * v[c];
      }
      next.m.push_back(std::move(v));
      next.pivots.push_back(piv);
      descend(next, idx + 1);
    }
  }
};

inline double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::vector<Point> basic_points(const std::vector<Row>& rows, int d) {
  Scanner s{rows, d, {}};
  s.run();
  return {s.found.begin(), s.found.end()};
}

}  // namespace detail_vertex

// Vertices, deduplicated and sorted lexicographically. Throws capacity_error
// for unbounded input or when the d-subset scan is over budget.
inline std::vector<Point> vertices(const HPolytope& H) {
  const int d = H.dim();
  const int m = H.row_count();
  if (d > kMaxDim || m > kMaxRows || detail_vertex::binomial(m, d) > kMaxSubsets)
    throw capacity_error("vertex enumeration over budget (d=" + std::to_string(d) +
                         ", rows=" + std::to_string(m) + ")");
  std::vector<Vector> normals;
  for (const auto& r : H.rows()) normals.push_back(r.a);
  // Without d independent normals the set is empty or contains a line.
  if (rank_of(normals) < d) throw capacity_error("polyhedron is unbounded or empty");
  // Recession cone {y : A y <= 0}, sliced by -(sum of normals) . y <= 1, is a
  // bounded polytope whose only vertex is the origin iff the input is bounded.
  std::vector<Row> cone;
  Vector s(d, Rational(0));
  for (const auto& r : H.rows()) {
    cone.push_back({r.a, Rational(0), {}});
    for (int k = 0; k < d; ++k) s[k] -= r.a[k];
  }
  cone.push_back({s, Rational(1), {}});
  for (const auto& y : detail_vertex::basic_points(cone, d))
    if (std::any_of(y.begin(), y.end(), [](const Rational& q) { return q != 0; }))
      throw capacity_error("polyhedron is unbounded");
  return detail_vertex::basic_points(H.rows(), d);
}

// Facets of conv(points) for a full-dimensional point set, as normalized rows
// sorted canonically. Double description on the cone of valid inequalities.
inline std::vector<Row> hull_facets(const std::vector<Point>& points) {
  if (points.empty()) throw domain_error("convex hull of an empty set");
  const int D = static_cast<int>(points[0].size());
  if (affine_dimension(points) != D) throw domain_error("point set is not full-dimensional");
  const int N = static_cast<int>(points.size());
  // z = (a, b) valid iff b - a.v >= 0 for every v.
  std::vector<Vector> cons(N, Vector(D + 1));
  for (int k = 0; k < N; ++k) {
    for (int c = 0; c < D; ++c) cons[k][c] = -points[k][c];
    cons[k][D] = 1;
  }
  // Initial simplicial cone from D+1 independent constraints.
  std::vector<int> basis;
  {
    std::vector<Vector> acc;
    for (int k = 0; k < N && static_cast<int>(basis.size()) < D + 1; ++k) {
      acc.push_back(cons[k]);
      if (rank_of(acc) == static_cast<int>(acc.size()))
        basis.push_back(k);
      else
        acc.pop_back();
    }
  }
  const int B = D + 1;
  // Rays are the columns of the inverse of the basis matrix.
  std::vector<Vector> inv(B, Vector(B, Rational(0)));
  {
    std::vector<Vector> m(B);
    for (int r = 0; r < B; ++r) {
      m[r] = cons[basis[r]];
      for (int c = 0; c < B; ++c) m[r].push_back(r == c ? 1 : 0);
    }
    for (int c = 0; c < B; ++c) {
      int piv = c;
      while (m[piv][c] == 0) ++piv;
      std::swap(m[piv], m[c]);
      const Rational f = 1 / m[c][c];
      for (auto& x : m[c]) x *= f;
      for (int r = 0; r < B; ++r) {
        if (r == c || m[r][c] == 0) continue;
        const Rational g = m[r][c];
        for (int k = 0; k < 2 * B; ++k) m[r][k] -= g * m[c][k];
      }
    }
    for (int r = 0; r < B; ++r)
      for (int c = 0; c < B; ++c) inv[r][c] = m[r][B + c];
  }
  struct Ray {
    Vector z;
    Bits zeros;
  };
  std::vector<Ray> rays;
  std::vector<bool> added(N, false);
  for (int k : basis) added[k] = true;
  for (int c = 0; c < B; ++c) {
    Ray ray;
    ray.z.resize(B);
    for (int r = 0; r < B; ++r) ray.z[r] = inv[r][c];
    ray.zeros = Bits(N);
    for (int k : basis)
      if (dot(cons[k], ray.z) == 0) ray.zeros.set(k);
    rays.push_back(std::move(ray));
  }
  Bits processed(N);
  for (int k : basis) processed.set(k);
  for (int k = 0; k < N; ++k) {
    if (added[k]) continue;
    std::vector<Ray> pos, neg, zero;
    std::vector<Rational> val;
    for (auto& ray : rays) {
      const Rational v = dot(cons[k], ray.z);
      if (v > 0)
        pos.push_back(ray);
      else if (v < 0)
        neg.push_back(ray);
      else {
        ray.zeros.set(k);
        zero.push_back(ray);
      }
    }
    std::vector<Ray> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    const std::vector<Ray> old = rays;
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        const Bits common = p.zeros & q.zeros;
        if (static_cast<int>(common.count()) < B - 2) continue;
        bool adjacent = true;
        for (const auto& r : old) {
          if (&r == &p || &r == &q) continue;
          if (r.z == p.z || r.z == q.z) continue;
          if (common.is_subset_of(r.zeros)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        const Rational vp = dot(cons[k], p.z);
        const Rational vq = dot(cons[k], q.z);
        Ray ray;
        ray.z.resize(B);
        for (int c = 0; c < B; ++c) ray.z[c] = vp * q.z[c] - vq * p.z[c];
        ray.zeros = common;
        ray.zeros.set(k);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
    added[k] = true;
  }
  std::set<std::pair<std::vector<Rational>, Rational>> seen;
  std::vector<Row> out;
  for (const auto& ray : rays) {
    Row r{Vector(ray.z.begin(), ray.z.begin() + D), ray.z[D], {}};
    if (std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x == 0; })) continue;
    r = normalize(std::move(r));
    if (seen.insert({r.a, r.b}).second) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Row& x, const Row& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Faces

// A nonempty face is identified by its vertex set; `tight` is the closed set
// of rows active on all of its vertices. The empty face has dim -1.
struct FaceHandle {
  std::vector<int> tight;
  Bits vertex_set;
  int dim = -1;

  bool empty() const { return vertex_set.none(); }
  std::vector<int> vertex_ids() const {
    std::vector<int> ids;
    for (auto k = vertex_set.find_first(); k != Bits::npos; k = vertex_set.find_next(k))
      ids.push_back(static_cast<int>(k));
    return ids;
  }
  bool operator==(const FaceHandle& o) const { return vertex_set == o.vertex_set; }
  bool operator<(const FaceHandle& o) const {
    if (dim != o.dim) return dim < o.dim;
    return tight < o.tight;
  }
};

class FaceLattice {
 public:
  explicit FaceLattice(HPolytope h) : h_(std::move(h)), verts_(poly::vertices(h_)) {
    if (verts_.empty()) throw domain_error("polytope is empty");
    const int m = h_.row_count();
    row_verts_.assign(m, Bits(verts_.size()));
    for (int r = 0; r < m; ++r)
      for (std::size_t v = 0; v < verts_.size(); ++v)
        if (h_.tight(r, verts_[v])) row_verts_[r].set(v);
  }

  const HPolytope& polytope() const { return h_; }
  const std::vector<Point>& vertices() const { return verts_; }
  int dim() const { return h_.dim(); }

  int vertex_index(const Point& p) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), p);
    if (it == verts_.end() || *it != p) throw domain_error("point is not a vertex");
    return static_cast<int>(it - verts_.begin());
  }

  FaceHandle face_of_vertex_set(const Bits& vs) const {
    FaceHandle f;
    f.vertex_set = vs;
    if (vs.none()) {
      for (int r = 0; r < h_.row_count(); ++r) f.tight.push_back(r);
      return f;
    }
    std::vector<Vector> normals;
    for (int r = 0; r < h_.row_count(); ++r) {
      if (vs.is_subset_of(row_verts_[r])) {
        f.tight.push_back(r);
        normals.push_back(h_.rows()[r].a);
      }
    }
    // aff(F) = {x : A_T x = b_T} for the closed tight set T.
    f.dim = h_.dim() - rank_of(std::move(normals));
    return f;
  }

  FaceHandle face_of_rows(const std::vector<int>& rows) const {
    Bits vs(verts_.size());
    vs.set();
    for (int r : rows) {
      detail::require(r >= 0 && r < h_.row_count(), "row index out of range");
      vs &= row_verts_[r];
    }
    return face_of_vertex_set(vs);
  }

  FaceHandle face_of_label(const std::string& label) const {
    return face_of_rows({h_.find(label)});
  }

  FaceHandle top() const { return face_of_rows({}); }

  FaceHandle vertex_face(int v) const {
    Bits vs(verts_.size());
    vs.set(v);
    return face_of_vertex_set(vs);
  }

  FaceHandle meet(const FaceHandle& x, const FaceHandle& y) const {
    return face_of_vertex_set(x.vertex_set & y.vertex_set);
  }

  static bool contains(const FaceHandle& outer, const FaceHandle& inner) {
    return inner.vertex_set.is_subset_of(outer.vertex_set);
  }

  // Nonempty faces G with lower <= G <= upper; lower must be nonempty.
  std::vector<FaceHandle> interval(const FaceHandle& lower, const FaceHandle& upper) const {
    detail::require(!lower.empty(), "interval needs a nonempty lower face");
    detail::require(contains(upper, lower), "interval bounds are not nested");
    std::vector<int> extra;
    std::set_difference(lower.tight.begin(), lower.tight.end(), upper.tight.begin(),
                        upper.tight.end(), std::back_inserter(extra));
    std::set<Bits> seen{upper.vertex_set};
    std::vector<FaceHandle> out{upper};
    for (std::size_t head = 0; head < out.size(); ++head) {
      const FaceHandle cur = out[head];
      for (int r : extra) {
        if (std::binary_search(cur.tight.begin(), cur.tight.end(), r)) continue;
        Bits vs = cur.vertex_set & row_verts_[r];
        if (!seen.insert(vs).second) continue;
        out.push_back(face_of_vertex_set(vs));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<FaceHandle> faces_through(int v) const { return interval(vertex_face(v), top()); }

  std::vector<FaceHandle> all_faces() const {
    std::set<Bits> seen;
    std::vector<FaceHandle> out;
    for (std::size_t v = 0; v < verts_.size(); ++v)
      for (auto& f : faces_through(static_cast<int>(v)))
        if (seen.insert(f.vertex_set).second) out.push_back(std::move(f));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::string> labels(const FaceHandle& f) const {
    std::vector<std::string> out;
    for (int r : f.tight) out.push_back(h_.rows()[r].label);
    return out;
  }

 private:
  HPolytope h_;
  std::vector<Point> verts_;
  std::vector<Bits> row_verts_;
};

inline std::vector<FaceHandle> faces_through(const FaceLattice& L, const Point& v) {
  return L.faces_through(L.vertex_index(v));
}

// ---------------------------------------------------------------------------
// Cayley sums

inline bool is_full_dimensional(const HPolytope& H) {
  return affine_dimension(vertices(H)) == H.dim();
}

// conv((P x 0) u (Q x 1)); the facets x_{d+1} = 0 and x_{d+1} = 1 are
// labelled "P" and "Q".
inline HPolytope cayley_sum(const HPolytope& P, const HPolytope& Q) {
  detail::require(P.dim() == Q.dim(), "Cayley sum of polytopes of different dimension");
  const int d = P.dim();
  std::vector<Point> pts;
  for (auto v : vertices(P)) {
    v.push_back(0);
    pts.push_back(std::move(v));
  }
  for (auto v : vertices(Q)) {
    v.push_back(1);
    pts.push_back(std::move(v));
  }
  if (affine_dimension(pts) != d + 1)
    throw domain_error("Cayley sum needs full-dimensional summands");
  std::vector<Row> rows = hull_facets(pts);
  Vector down(d + 1, Rational(0)), up(d + 1, Rational(0));
  down[d] = -1;
  up[d] = 1;
  for (auto& r : rows) {
    if (r.a == down && r.b == 0) r.label = "P";
    if (r.a == up && r.b == 1) r.label = "Q";
  }
  return HPolytope(d + 1, std::move(rows));
}

// Irredundant facet rows, normalized, sorted, without labels. For
// full-dimensional polytopes this is a canonical form.
inline std::vector<std::pair<Vector, Rational>> canonical_form(const HPolytope& H) {
  const FaceLattice L(H);
  std::set<std::pair<Vector, Rational>> out;
  for (int r = 0; r < H.row_count(); ++r) {
    const FaceHandle f = L.face_of_rows({r});
    if (f.dim == H.dim() - 1) out.insert({H.rows()[r].a, H.rows()[r].b});
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Admissible faces and simple geometric mitosis, relative to a face `delta`
// of the lattice (usually the top face) with distinguished faces p, q.

// exp(F): the unique face G != F of delta with G n P = F, if there is one.
inline std::optional<FaceHandle> expand(const FaceLattice& L, const FaceHandle& delta,
                                        const FaceHandle& p, const FaceHandle& f) {
  detail::require(!f.empty(), "cannot expand the empty face");
  detail::require(FaceLattice::contains(delta, p), "P is not a face of delta");
  if (!FaceLattice::contains(p, f)) throw domain_error("face is not contained in P");
  std::optional<FaceHandle> found;
  for (const auto& g : L.interval(f, delta)) {
    if (g == f) continue;
    if (L.meet(g, p) == f) {
      if (found) return std::nullopt;
      found = g;
    }
  }
  if (found && found->dim != f.dim + 1)
    throw std::logic_error("expansion has dimension other than dim F + 1");
  return found;
}

inline std::optional<FaceHandle> expand(const FaceLattice& L, const std::string& p_label,
                                        const FaceHandle& f) {
  return expand(L, L.top(), L.face_of_label(p_label), f);
}

struct MitosisResult {
  bool admissible = false;
  std::optional<FaceHandle> expansion;
  std::vector<FaceHandle> offsprings;  // sorted
};

inline MitosisResult geometric_mitosis(const FaceLattice& L, const FaceHandle& delta,
                                       const FaceHandle& p, const FaceHandle& q, int v,
                                       const FaceHandle& f) {
  if (!FaceLattice::contains(p, f)) throw domain_error("face is not contained in P");
  if (!f.vertex_set.test(v)) throw domain_error("face does not contain the vertex v");
  detail::require(FaceLattice::contains(delta, q), "Q is not a face of delta");
  MitosisResult res;
  res.expansion = expand(L, delta, p, f);
  if (!res.expansion) return res;
  res.admissible = true;
  const FaceHandle exp_q = L.meet(*res.expansion, q);
  for (const auto& e : L.interval(L.vertex_face(v), delta)) {
    if (e.dim != f.dim + 1) continue;
    if (FaceLattice::contains(p, e) || FaceLattice::contains(q, e)) continue;
    if (!FaceLattice::contains(exp_q, L.meet(e, q))) continue;
    res.offsprings.push_back(e);
  }
  if (std::find(res.offsprings.begin(), res.offsprings.end(), *res.expansion) ==
      res.offsprings.end())
    throw std::logic_error("exp(F) missing from its own mitosis");
  return res;
}

inline MitosisResult geometric_mitosis(const FaceLattice& L, const std::string& p_label,
                                       const std::string& q_label, const Point& v,
                                       const FaceHandle& f) {
  return geometric_mitosis(L, L.top(), L.face_of_label(p_label), L.face_of_label(q_label),
                           L.vertex_index(v), f);
}

inline std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    const Integer den(s.substr(slash + 1));
    if (den == 0) throw format_error("zero denominator in '" + s + "'");
    return Rational(Integer(s.substr(0, slash)), den);
  } catch (const format_error&) {
    throw;
  } catch (const std::exception&) {
    throw format_error("malformed rational '" + s + "'");
  }
}

}  // namespace mitosis::poly
