#pragma once

// JSON encodings. Keys are emitted in sorted order, arrays in canonical
// order, so dump() output is byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "gz.hpp"
#include "pipedream.hpp"
#include "polykernel.hpp"
#include "schubert.hpp"
#include "verify.hpp"

namespace mitosis::io {

using Json = nlohmann::json;

inline Json envelope(const std::string& kind, Json payload) {
  return Json{{"kind", kind}, {"payload", std::move(payload)}};
}

namespace detail_io {

template <class T>
T get(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw format_error(std::string("bad or missing field '") + key + "'");
  }
}

inline std::vector<int> filled(const std::vector<bool>& row) {
  std::vector<int> out;
  for (std::size_t k = 0; k < row.size(); ++k)
    if (row[k]) out.push_back(static_cast<int>(k) + 1);
  return out;
}

}  // namespace detail_io

// --- pipe dreams ----------------------------------------------------------

inline Json to_json(const pd::BasicPipeDream& D) {
  return Json{{"ell", D.ell()}, {"a", detail_io::filled(D.a)}, {"b", detail_io::filled(D.b)}};
}

inline pd::BasicPipeDream basic_from_json(const Json& j) {
  try {
    return pd::BasicPipeDream::from_filled(detail_io::get<int>(j, "ell"),
                                           detail_io::get<std::vector<int>>(j, "a"),
                                           detail_io::get<std::vector<int>>(j, "b"));
  } catch (const domain_error& e) {
    throw format_error(e.what());
  }
}

inline Json to_json(const pd::TwoRowResult& r) {
  Json kids = Json::array();
  for (const auto& D : r.offsprings) kids.push_back(to_json(D));
  return Json{{"r", r.r}, {"J", r.J}, {"offsprings", kids}};
}

template <pd::Family F>
Json to_json(const pd::PipeDream<F>& D) {
  Json crosses = Json::array();
  for (const auto& c : D.crosses()) crosses.push_back({c.row, c.col});
  return Json{{"type", F == pd::Family::A ? "A" : "C"}, {"n", D.n()}, {"crosses", crosses}};
}

template <pd::Family F>
pd::PipeDream<F> pipe_dream_from_json(const Json& j) {
  const auto type = detail_io::get<std::string>(j, "type");
  if (type != (F == pd::Family::A ? "A" : "C")) throw format_error("pipe dream of the wrong type");
  const int n = detail_io::get<int>(j, "n");
  std::vector<pd::Cell> cells;
  for (const auto& c : detail_io::get<std::vector<std::vector<int>>>(j, "crosses")) {
    if (c.size() != 2) throw format_error("a cross must be a pair [i, j]");
    cells.push_back({c[0], c[1]});
  }
  try {
    return pd::PipeDream<F>(n, std::move(cells));
  } catch (const domain_error& e) {
    throw format_error(e.what());
  }
}

template <pd::Family F>
Json to_json(const std::vector<pd::PipeDream<F>>& ds) {
  Json out = Json::array();
  for (const auto& D : ds) out.push_back(to_json(D));
  return out;
}

// --- polytopes ------------------------------------------------------------

inline Json to_json(const poly::HPolytope& H) {
  Json rows = Json::array();
  for (const auto& r : H.rows()) {
    std::vector<std::string> a;
    for (const auto& x : r.a) a.push_back(poly::to_string(x));
    Json row{{"a", a}, {"b", poly::to_string(r.b)}};
    if (!r.label.empty()) row["label"] = r.label;
    rows.push_back(row);
  }
  return Json{{"dim", H.dim()}, {"rows", rows}};
}

inline poly::HPolytope hpolytope_from_json(const Json& j) {
  const int dim = detail_io::get<int>(j, "dim");
  std::vector<poly::Row> rows;
  for (const auto& r : detail_io::get<std::vector<Json>>(j, "rows")) {
    poly::Row row;
    for (const auto& x : detail_io::get<std::vector<Json>>(r, "a"))
      row.a.push_back(x.is_string() ? poly::parse_rational(x.get<std::string>())
                                    : poly::Rational(x.get<long long>()));
    const Json& b = r.at("b");
    row.b = b.is_string() ? poly::parse_rational(b.get<std::string>()) : poly::Rational(b.get<long long>());
    if (r.contains("label")) row.label = r.at("label").get<std::string>();
    rows.push_back(std::move(row));
  }
  try {
    return poly::HPolytope(dim, std::move(rows));
  } catch (const domain_error& e) {
    throw format_error(e.what());
  }
}

inline Json to_json(const poly::FaceHandle& f) { return Json{{"tight", f.tight}, {"dim", f.dim}}; }

// --- GZ -------------------------------------------------------------------

inline Json to_json(const gz::EquationFace& f) {
  Json eqs = Json::array();
  for (const auto& e : f.eqs())
    eqs.push_back({{"kind", e.kind == gz::Kind::A ? "A" : "B"}, {"i", e.i}, {"j", e.j}});
  return Json{{"type", f.shape.type() == weyl::Type::A ? "A" : "C"}, {"n", f.shape.n()}, {"eqs", eqs}};
}

inline gz::EquationFace equation_face_from_json(const Json& j) {
  const auto type = detail_io::get<std::string>(j, "type");
  if (type != "A" && type != "C") throw format_error("type must be A or C");
  try {
    const gz::Shape sh(type == "A" ? weyl::Type::A : weyl::Type::C, detail_io::get<int>(j, "n"));
    std::vector<gz::Equation> eqs;
    for (const auto& e : detail_io::get<std::vector<Json>>(j, "eqs")) {
      const auto kind = detail_io::get<std::string>(e, "kind");
      if (kind != "A" && kind != "B") throw format_error("equation kind must be A or B");
      eqs.push_back({kind == "A" ? gz::Kind::A : gz::Kind::B, detail_io::get<int>(e, "i"),
                     detail_io::get<int>(e, "j")});
    }
    return gz::EquationFace(sh, eqs);
  } catch (const domain_error& e) {
    throw format_error(e.what());
  }
}

inline Json to_json(const std::vector<gz::EquationFace>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(to_json(f));
  return out;
}

inline Json to_json(const gz::Diagram& D) {
  Json out = Json::array();
  for (const auto& c : D) out.push_back({c.i, c.j});
  return out;
}

// --- polynomials and reports ----------------------------------------------

inline Json to_json(const schubert::IntPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"co", c}});
  return Json{{"vars", p.vars()}, {"terms", terms}};
}

inline schubert::IntPolynomial polynomial_from_json(const Json& j) {
  schubert::IntPolynomial p(detail_io::get<int>(j, "vars"));
  try {
    for (const auto& t : detail_io::get<std::vector<Json>>(j, "terms"))
      p.add(detail_io::get<std::vector<int>>(t, "exp"), detail_io::get<long long>(t, "co"));
  } catch (const domain_error& e) {
    throw format_error(e.what());
  }
  return p;
}

inline Json to_json(const verify::Report& r) {
  return Json{{"checked", r.checked}, {"mismatches", r.details}, {"mismatch_count", r.mismatches}};
}

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw format_error(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace mitosis::io
