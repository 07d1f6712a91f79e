#pragma once

// Command-line front end. run() is separate from main() so tests can drive
// it in-process.

#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mitosis/error.hpp"
#include "mitosis/gz.hpp"
#include "mitosis/io.hpp"
#include "mitosis/pipedream.hpp"
#include "mitosis/schubert.hpp"
#include "mitosis/verify.hpp"
#include "mitosis/weyl.hpp"

namespace mitosis::cli {

enum Exit { ok = 0, mismatch = 1, usage = 2, capacity = 3 };

namespace detail_cli {

inline std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw format_error("not an integer list: '" + s + "'");
    }
  }
  return out;
}

// "1,1;2,3"
inline std::vector<std::pair<int, int>> cell_list(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ';');) {
    const auto v = int_list(tok);
    if (v.size() != 2) throw format_error("cells are written 'i,j;i,j;...'");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

inline std::string join(const std::vector<int>& v, const std::string& sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

inline weyl::Type parse_type(const std::string& t) { return t == "a" ? weyl::Type::A : weyl::Type::C; }

inline gz::Flavor parse_flavor(const std::string& f) {
  return f == "dual" ? gz::Flavor::dual : gz::Flavor::kogan;
}

inline std::string diagram_text(const gz::Diagram& D) {
  std::string s;
  for (const auto& c : D) s += (s.empty() ? "" : ";") + std::to_string(c.i) + "," + std::to_string(c.j);
  return s.empty() ? "(empty)" : s;
}

struct Output {
  std::ostream& out;
  bool json;

  void emit(const std::string& kind, const io::Json& payload, const std::string& ascii) const {
    if (json)
      out << io::envelope(kind, payload).dump() << "\n";
    else
      out << ascii << "\n";
  }
};

inline std::string faces_ascii(const std::vector<gz::EquationFace>& fs, gz::Flavor flavor) {
  std::string s = "faces: " + std::to_string(fs.size());
  for (const auto& f : fs) {
    const auto m = gz::close_and_measure(f);
    s += "\n\n" + gz::to_string(f) + "  dim " + std::to_string(m.dim) + "  diagram " +
         diagram_text(gz::diagram_of(f, flavor)) + "\n" + gz::render(f);
  }
  return s;
}

template <pd::Family F>
std::string pipe_dreams_ascii(const std::vector<pd::PipeDream<F>>& ds) {
  std::string s = "offsprings: " + std::to_string(ds.size());
  for (const auto& D : ds) s += "\n\n" + pd::render(D);
  return s;
}

inline std::string report_ascii(const verify::Report& r) {
  std::string s = "checked: " + std::to_string(r.checked) + ", mismatches: " + std::to_string(r.mismatches);
  for (const auto& d : r.details) s += "\nmismatch: " + d;
  return s;
}

}  // namespace detail_cli

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  using namespace detail_cli;
  CLI::App app{"mitosis: pipe dreams, GZ polytopes and geometric mitosis"};
  app.require_subcommand(1);
  std::string format = "ascii";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));
  };
  int result = Exit::ok;
  std::function<void(const Output&)> action;

  // mitosis basic|a|c
  auto* mitosis = app.add_subcommand("mitosis", "two-row, type A and type C mitosis");
  mitosis->require_subcommand(1);
  int ell = 0, n = 0, index = 0;
  std::string a_list, b_list, crosses;
  bool stdin_json = false;
  {
    auto* basic = mitosis->add_subcommand("basic", "two-row mitosis");
    basic->add_option("--ell", ell, "number of b-squares")->required();
    basic->add_option("--a", a_list, "filled a-squares, e.g. 1,2,3");
    basic->add_option("--b", b_list, "filled b-squares");
    add_format(basic);
    basic->callback([&] {
      action = [&](const Output& o) {
        const auto D = pd::BasicPipeDream::from_filled(ell, int_list(a_list), int_list(b_list));
        const auto r = pd::two_row_mitosis(D);
        std::string s = "r: " + std::to_string(r.r) + "\nJ: " + join(r.J);
        for (const auto& child : r.offsprings) s += "\n\n" + pd::render(child);
        o.emit("two_row_mitosis", io::to_json(r), s);
      };
    });
    for (const char* fam : {"a", "c"}) {
      auto* sub = mitosis->add_subcommand(fam, std::string("mitosis on ") +
                                                   (fam[0] == 'a' ? "pipe dreams" : "skew pipe dreams"));
      sub->add_option("--n", n, "rank");
      sub->add_option("--i", index, "operator index")->required();
      sub->add_option("--crosses", crosses, "cells i,j;i,j;...");
      sub->add_flag("--stdin-json", stdin_json, "read the pipe dream as JSON from stdin");
      add_format(sub);
      const bool type_a = fam[0] == 'a';
      sub->callback([&, type_a] {
        action = [&, type_a](const Output& o) {
          auto load = [&]<pd::Family F>() {
            if (stdin_json) {
              const std::string text{std::istreambuf_iterator<char>(in), {}};
              io::Json j = io::parse(text);
              if (j.contains("payload")) j = j["payload"];
              return io::pipe_dream_from_json<F>(j);
            }
            if (n < 1) throw domain_error("--n is required without --stdin-json");
            std::vector<pd::Cell> cells;
            for (auto [r, c] : cell_list(crosses)) cells.push_back({r, c});
            return pd::PipeDream<F>(n, cells);
          };
          if (type_a) {
            const auto D = load.template operator()<pd::Family::A>();
            const auto kids = pd::mitosis_A(index, D);
            o.emit("pipe_dreams", io::to_json(kids), pipe_dreams_ascii(kids));
          } else {
            const auto D = load.template operator()<pd::Family::C>();
            const auto kids = pd::mitosis_C(index, D);
            o.emit("pipe_dreams", io::to_json(kids), pipe_dreams_ascii(kids));
          }
        };
      });
    }
  }

  // gz face|mitosis
  auto* gzc = app.add_subcommand("gz", "faces of GZ polytopes");
  gzc->require_subcommand(1);
  std::string type = "a", flavor = "kogan", diagram;
  bool adapted = false;
  {
    auto common = [&](CLI::App* sub) {
      sub->add_option("--type", type, "a or c")->check(CLI::IsMember({"a", "c"}));
      sub->add_option("--n", n, "rank")->required();
      sub->add_option("--diagram", diagram, "filled cells i,j;i,j;... (default: the vertex)");
      sub->add_option("--flavor", flavor, "kogan or dual")->check(CLI::IsMember({"kogan", "dual"}));
      add_format(sub);
    };
    auto load_face = [&]() {
      const gz::Shape sh(parse_type(type), n);
      const gz::Flavor fl = parse_flavor(flavor);
      if (diagram.empty()) return gz::vertex_face(sh, fl);
      gz::Diagram D;
      for (auto [i, j] : cell_list(diagram)) D.push_back({i, j});
      std::sort(D.begin(), D.end());
      return gz::face_of_diagram(sh, D, fl);
    };
    auto* face = gzc->add_subcommand("face", "equations, closure and dimension of a face");
    common(face);
    face->callback([&, load_face] {
      action = [&, load_face](const Output& o) {
        const auto F = load_face();
        const auto m = gz::close_and_measure(F);
        const gz::EquationFace closure(F.shape, m.closure);
        io::Json j{{"face", io::to_json(F)},
                   {"feasible", m.feasible},
                   {"dim", m.dim},
                   {"closure", io::to_json(closure)}};
        std::string s = "equations: " + gz::to_string(F) + "\nfeasible: " +
                        (m.feasible ? "yes" : "no") + "\ndim: " + std::to_string(m.dim) +
                        "\nclosure: " + gz::to_string(closure) + "\n" + gz::render(F);
        o.emit("equation_face", j, s);
      };
    });
    auto* mit = gzc->add_subcommand("mitosis", "geometric mitosis on Kogan-type faces");
    common(mit);
    mit->add_option("--i", index, "operator index")->required();
    mit->add_flag("--adapted", adapted, "adapted operator (type A Kogan, or the last-row dual operator)");
    mit->callback([&, load_face] {
      action = [&, load_face](const Output& o) {
        const auto F = load_face();
        const gz::Flavor fl = parse_flavor(flavor);
        std::vector<gz::EquationFace> kids;
        if (fl == gz::Flavor::dual) {
          if (F.shape.type() != weyl::Type::C) throw domain_error("dual flavor exists only in type C");
          kids = adapted ? schubert::adapted_dual_mitosis_C(F) : schubert::dual_mitosis_C(index, F);
        } else if (adapted) {
          if (F.shape.type() != weyl::Type::A) throw domain_error("--adapted with kogan flavor needs type a");
          kids = gz::adapted_mitosis_A(index, F);
        } else {
          gz::Calculus calc(F.shape);
          const auto r = gz::plain_mitosis(calc, fl, index, F.mask, false);
          if (!r) throw domain_error("face is not contained in P");
          for (auto m : r->offsprings) kids.emplace_back(F.shape, m);
          std::sort(kids.begin(), kids.end());
        }
        o.emit("equation_faces", io::to_json(kids), faces_ascii(kids, fl));
      };
    });
  }

  // schubert poly|sw
  auto* sch = app.add_subcommand("schubert", "Schubert polynomials and face sets S_w");
  sch->require_subcommand(1);
  std::string perm, word;
  bool experimental = false;
  {
    auto* polyc = sch->add_subcommand("poly", "Schubert polynomial by divided differences");
    polyc->add_option("--perm", perm, "one-line notation, e.g. 3,1,2")->required();
    add_format(polyc);
    polyc->callback([&] {
      action = [&](const Output& o) {
        const auto w = weyl::permutation(int_list(perm));
        const auto p = schubert::schubert_polynomial(w.rank(), w);
        o.emit("polynomial", io::to_json(p), p.str());
      };
    });
    auto* sw = sch->add_subcommand("sw", "faces S_w generated from the Kogan vertex");
    sw->add_option("--n", n, "rank")->required();
    sw->add_option("--word", word, "reduced word of w, e.g. 2,1");
    sw->add_option("--type", type, "a, or c with --experimental")->check(CLI::IsMember({"a", "c"}));
    sw->add_flag("--experimental", experimental, "allow the unvalidated type C generation");
    add_format(sw);
    sw->callback([&] {
      action = [&](const Output& o) {
        const auto w = int_list(word);
        std::vector<gz::EquationFace> faces;
        if (type == "c") {
          if (!experimental) throw domain_error("type c S_w generation needs --experimental");
          faces = schubert::experimental::generate_Sw_C(n, w);
        } else {
          faces = schubert::generate_Sw(n, w);
        }
        o.emit("equation_faces", io::to_json(faces), faces_ascii(faces, gz::Flavor::kogan));
      };
    });
  }

  // subwords
  std::string target, host;
  {
    auto* sub = app.add_subcommand("subwords", "reduced subwords of a host word evaluating to a target");
    sub->add_option("--n", n, "rank")->required();
    sub->add_option("--target", target, "target in one-line notation")->required();
    sub->add_option("--type", type, "a or c (default c)")->check(CLI::IsMember({"a", "c"}));
    sub->add_option("--host", host, "host word (default w0_bar(n))");
    add_format(sub);
    type = "a";
    sub->preparse_callback([&](std::size_t) { type = "c"; });
    sub->callback([&] {
      action = [&](const Output& o) {
        const weyl::Type t = parse_type(type);
        const weyl::Word h = host.empty() ? weyl::w0_bar(n) : int_list(host);
        const weyl::Element tgt(t, n, int_list(target));
        const auto subs = weyl::reduced_subwords(t, n, h, tgt);
        io::Json j = io::Json::array();
        std::string s = "host: " + join(h) + "\nsubwords: " + std::to_string(subs.size());
        for (const auto& S : subs) {
          j.push_back(S);
          s += "\n" + join(S) + "  ->  " + join(weyl::subword(h, S));
        }
        o.emit("subwords", {{"host", h}, {"positions", j}}, s);
      };
    });
  }

  // verify
  auto* ver = app.add_subcommand("verify", "exhaustive verification sweeps");
  ver->require_subcommand(1);
  std::string mutation;
  for (const char* name : {"main", "c", "km", "schubert", "dualchain"}) {
    const std::string verb = name;
    auto* sub = ver->add_subcommand(verb, "verification sweep");
    sub->add_option("--n", n, "rank");
    sub->add_option("--mutation", mutation, "drop-prefix or unswapped-dual")
        ->check(CLI::IsMember({"drop-prefix", "unswapped-dual"}));
    add_format(sub);
    sub->preparse_callback([&, verb](std::size_t) { n = verb == "dualchain" ? 2 : 3; });
    sub->callback([&, verb] {
      action = [&, verb](const Output& o) {
        verify::Mutation mut;
        if (mutation == "drop-prefix") {
          if (verb == "dualchain") throw domain_error("drop-prefix does not apply to dualchain");
          mut.rule = pd::PrefixRule::dropped;
        } else if (mutation == "unswapped-dual") {
          if (verb != "dualchain") throw domain_error("unswapped-dual applies only to dualchain");
          mut.unswapped_dual = true;
        }
        verify::Report r;
        if (verb == "main") r = verify::theorem_main(n, mut);
        if (verb == "c") r = verify::theorem_C(n, mut);
        if (verb == "km") r = verify::knutson_miller(n, mut);
        if (verb == "schubert") r = verify::schubert_sw(n, mut);
        if (verb == "dualchain") {
          if (n != 2) throw domain_error("dualchain is tabulated for n = 2");
          r = verify::dual_chain(mut);
        }
        o.emit("report", io::to_json(r), report_ascii(r));
        if (r.mismatches > 0) result = Exit::mismatch;
      };
    });
  }

  // render
  {
    auto* sub = app.add_subcommand("render", "render a JSON object read from stdin");
    add_format(sub);
    sub->callback([&] {
      action = [&](const Output& o) {
        const std::string text{std::istreambuf_iterator<char>(in), {}};
        io::Json j = io::parse(text);
        if (j.is_object() && j.contains("payload")) j = j["payload"];
        if (!j.is_object()) throw format_error("expected a JSON object");
        if (j.contains("crosses")) {
          if (j.value("type", "") == "C") {
            const auto D = io::pipe_dream_from_json<pd::Family::C>(j);
            o.emit("pipe_dream", io::to_json(D), pd::render(D));
          } else {
            const auto D = io::pipe_dream_from_json<pd::Family::A>(j);
            o.emit("pipe_dream", io::to_json(D), pd::render(D));
          }
        } else if (j.contains("eqs")) {
          const auto F = io::equation_face_from_json(j);
          o.emit("equation_face", io::to_json(F), gz::render(F));
        } else if (j.contains("ell")) {
          const auto D = io::basic_from_json(j);
          o.emit("basic_pipe_dream", io::to_json(D), pd::render(D));
        } else if (j.contains("terms")) {
          const auto p = io::polynomial_from_json(j);
          o.emit("polynomial", io::to_json(p), p.str());
        } else if (j.contains("rows")) {
          const auto H = io::hpolytope_from_json(j);
          std::string s;
          for (const auto& r : H.rows()) {
            std::vector<std::string> a;
            for (const auto& x : r.a) a.push_back(poly::to_string(x));
            std::string line;
            for (const auto& x : a) line += (line.empty() ? "" : " ") + x;
            s += (s.empty() ? "" : "\n") + line + " <= " + poly::to_string(r.b) +
                 (r.label.empty() ? "" : "  " + r.label);
          }
          o.emit("hpolytope", io::to_json(H), s);
        } else {
          throw format_error("unrecognized JSON object");
        }
      };
    });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return Exit::usage;
  }
  if (!action) {
    err << "usage error: nothing to do\n";
    return Exit::usage;
  }
  try {
    action(Output{out, format == "json"});
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << "\n";
    return Exit::capacity;
  } catch (const format_error& e) {
    err << "format error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return Exit::usage;
  }
  return result;
}

}  // namespace mitosis::cli
