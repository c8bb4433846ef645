#include "hcrep/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hcrep/antitone.hpp"
#include "hcrep/commutator.hpp"
#include "hcrep/hc.hpp"
#include "hcrep/io.hpp"
#include "hcrep/learn.hpp"

namespace hcrep::cli {

namespace {

using io::Json;

struct Options {
  std::string lattice;
  std::string rep;
  std::string extrep;
  std::string oracle;
  std::string equalities;
  std::string alpha;
  std::string point;
  std::string format = "json";
  std::string example;
  std::size_t max_rounds = LearnOptions{}.max_rounds;
  bool reduced = false;
  bool assume_hc12 = false;
};

class Session {
 public:
  Session(const Options& o, std::istream& in, std::ostream& out)
      : o_(o), in_(in), out_(out) {}

  int dispatch(const std::string& cmd);

 private:
  bool table() const { return o_.format == "table"; }

  LatticePtr lattice_override() {
    if (o_.lattice.empty()) return nullptr;
    if (std::filesystem::exists(o_.lattice)) {
      return io::parse_lattice(io::read_json_file(o_.lattice));
    }
    return io::named_lattice(o_.lattice);
  }

  Json document(const std::string& path) {
    if (!path.empty()) return io::read_json_file(path);
    if (stdin_used_) throw ParseError("only one document can come from stdin");
    stdin_used_ = true;
    return io::read_json(in_);
  }

  Rep rep() { return io::parse_rep(document(o_.rep), lattice_override()); }

  Element alpha(const Lattice& l) {
    if (o_.alpha.empty()) throw ParseError("--alpha is required");
    auto e = l.find(o_.alpha);
    if (!e) throw ParseError("unknown lattice element '" + o_.alpha + "'");
    return *e;
  }

  ExtVec point() {
    if (o_.point.empty()) throw ParseError("--point is required");
    std::string s = o_.point;
    for (char& c : s) {
      if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',') c = ' ';
    }
    std::istringstream is(s);
    std::vector<ExtNat> c;
    std::string tok;
    while (is >> tok) {
      if (tok == "inf") {
        c.push_back(kInf);
        continue;
      }
      if (tok.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("bad coordinate '" + tok + "' in --point");
      }
      try {
        c.emplace_back(static_cast<Coord>(std::stoull(tok)));
      } catch (const std::out_of_range&) {
        throw ParseError("coordinate '" + tok + "' is too large");
      }
    }
    return ExtVec(std::move(c));
  }

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

  int boolean(bool value, Json j) {
    if (table()) {
      out_ << (value ? "true" : "false") << '\n';
    } else {
      emit(j);
    }
    return value ? kExitOk : kExitFalse;
  }

  template <class R>
  void emit_points(const R& g) {
    if (!table()) {
      emit(io::to_json(g));
      return;
    }
    for (const auto& p : g.points()) {
      out_ << p.vec << '\t' << g.lattice().name(p.value) << '\n';
    }
  }

  Json check_json(const PropertyCheck& c, const Lattice& l) {
    Json j{{"holds", c.holds}};
    if (c.violation) {
      Json vecs = Json::array();
      for (const auto& v : c.violation->vectors) vecs.push_back(io::to_json(v));
      Json vals = Json::array();
      for (Element e : c.violation->values) vals.push_back(l.name(e));
      j["witness"] = {{"vectors", vecs},
                      {"values", vals},
                      {"detail", c.violation->detail}};
    }
    return j;
  }

  template <class Eq>
  int emit_equalities(const Lattice& l, const std::vector<Eq>& eqs) {
    if (table()) {
      for (const auto& e : eqs) out_ << format(l, e) << '\n';
    } else {
      emit(io::to_json(l, eqs));
    }
    return kExitOk;
  }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

int Session::dispatch(const std::string& cmd) {
  if (cmd == "example") {
    emit_points(example(o_.example).rep);
    return kExitOk;
  }
  if (cmd == "learn") {
    Rep target = io::parse_rep(document(o_.oracle), lattice_override());
    LearnOptions opts;
    opts.max_rounds = o_.max_rounds;
    LearnResult r = learn(oracle_from_rep(target), opts);
    Rep learned = canonical(r.learned);
    if (table()) {
      emit_points(learned);
      out_ << "rounds " << r.rounds << ", queries " << r.queries << '\n';
      return kExitOk;
    }
    Json j = io::to_json(learned);
    j["report"] = {{"rounds", r.rounds},
                   {"queries", r.queries},
                   {"shortcut_rounds", r.shortcut_rounds},
                   {"enumeration_rounds", r.enumeration_rounds},
                   {"collected_points", r.learned.points().size()}};
    emit(j);
    return kExitOk;
  }
  if (cmd == "from-equalities") {
    auto doc = io::parse_equalities(document(o_.equalities), lattice_override());
    if (!doc.extended.empty()) {
      throw DomainError("from-equalities takes plain commutator equalities only");
    }
    auto r = largest_from_equalities(doc.lattice, doc.plain, o_.assume_hc12);
    Rep c = canonical(r.rep);
    if (table()) {
      emit_points(c);
      for (std::size_t k = 0; k < doc.plain.size(); ++k) {
        out_ << format(*doc.lattice, doc.plain[k])
             << (r.attained[k] ? "\tattained" : "\tnot attained") << '\n';
      }
      return kExitOk;
    }
    Json j = io::to_json(c);
    Json report = Json::array();
    for (std::size_t k = 0; k < doc.plain.size(); ++k) {
      report.push_back({{"equality", format(*doc.lattice, doc.plain[k])},
                        {"attained", static_cast<bool>(r.attained[k])}});
    }
    j["report"] = report;
    emit(j);
    return kExitOk;
  }

  Rep g = rep();
  const Lattice& l = g.lattice();
  if (cmd == "eval" || cmd == "eval-ext") {
    ExtVec x = point();
    if (cmd == "eval" && !x.is_finite()) {
      throw DomainError("eval takes a finite point; use eval-ext");
    }
    Element v = cmd == "eval" ? eval(g, x.to_nat()) : eval_ext(g, x);
    if (table()) {
      out_ << l.name(v) << '\n';
    } else {
      emit(Json{{"point", io::to_json(x)}, {"value", l.name(v)}});
    }
    return kExitOk;
  }
  if (cmd == "canonical") {
    emit_points(canonical(g));
    return kExitOk;
  }
  if (cmd == "complete") {
    emit_points(complete(g));
    return kExitOk;
  }
  if (cmd == "check-complete") {
    ExtRep h = io::parse_extrep(document(o_.extrep), g.lattice_ptr());
    auto v = check_complete(g, h);
    Json j{{"complete", v.complete}};
    if (!v.complete) j["reason"] = v.reason;
    return boolean(v.complete, j);
  }
  if (cmd == "sublevel") {
    Element a = alpha(l);
    UpSet u = sublevel(g, a);
    if (table()) {
      for (const auto& x : u.generators()) out_ << x << '\n';
      return kExitOk;
    }
    Json gens = Json::array();
    for (const auto& x : u.generators()) gens.push_back(io::to_json(x));
    emit(Json{{"alpha", l.name(a)}, {"generators", gens}});
    return kExitOk;
  }
  if (cmd == "props") {
    AdmissibilityReport r = property_report(g);
    Json j{{"HC1", check_json(r.hc1, l)}, {"HC2", check_json(r.hc2, l)},
           {"HC3", check_json(r.hc3, l)}, {"HC4", check_json(r.hc4, l)},
           {"HC7", check_json(r.hc7, l)}};
    if (r.hc8) {
      j["HC8"] = check_json(*r.hc8, l);
    } else {
      j["HC8"] = {{"holds", nullptr}, {"detail", "undecided: HC2 fails"}};
    }
    j["admissible"] = r.admissible();
    if (table()) {
      for (const auto& [name, c] : j.items()) {
        if (name == "admissible") {
          out_ << name << '\t' << c.dump() << '\n';
          continue;
        }
        out_ << name << '\t' << c["holds"].dump();
        if (c.contains("witness")) {
          out_ << '\t' << c["witness"]["detail"].get<std::string>();
        }
        out_ << '\n';
      }
    } else {
      emit(j);
    }
    return kExitOk;
  }
  if (cmd == "admissible") {
    bool a = is_admissible(g);
    return boolean(a, Json{{"admissible", a}});
  }
  if (cmd == "determinable") {
    bool a = finitely_determinable(g);
    return boolean(a, Json{{"finitely_determinable", a}});
  }
  if (cmd == "to-equalities") {
    return emit_equalities(l, to_equalities(g, o_.reduced));
  }
  if (cmd == "to-extended-equalities") {
    return emit_equalities(l, to_extended_equalities(g));
  }
  throw ParseError("unknown command " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite representations of antitone functions into finite "
               "lattices and of higher commutator sequences",
               "hcrep"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
  };
  auto add_rep = [&](CLI::App* s) {
    s->add_option("--rep", o.rep, "Representation file (default: stdin)");
    s->add_option("--lattice", o.lattice,
                  "Lattice file or name; overrides the document's lattice");
    add_format(s);
  };

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate F_G at a finite point");
  add_rep(eval_cmd);
  eval_cmd->add_option("--point", o.point, "Point, e.g. 10,20")->required();

  auto* eval_ext_cmd = app.add_subcommand("eval-ext", "Evaluate the extension at a point");
  add_rep(eval_ext_cmd);
  eval_ext_cmd->add_option("--point", o.point, "Point, e.g. 29,inf")->required();

  add_rep(app.add_subcommand("canonical", "Canonical representation"));
  add_rep(app.add_subcommand("complete", "A complete representation"));

  auto* check_cmd = app.add_subcommand(
      "check-complete", "Decide whether --extrep is a complete representation");
  add_rep(check_cmd);
  check_cmd->add_option("--extrep", o.extrep, "Extended representation file");

  auto* sub_cmd = app.add_subcommand("sublevel", "Generators of {x : F(x) <= alpha}");
  add_rep(sub_cmd);
  sub_cmd->add_option("--alpha", o.alpha, "Lattice element")->required();

  add_rep(app.add_subcommand("props", "HC property report"));
  add_rep(app.add_subcommand("admissible", "Decide admissibility"));
  add_rep(app.add_subcommand("determinable",
                             "Decide determination by a finite part of the graph"));

  auto* learn_cmd = app.add_subcommand("learn", "Learn a representation from an oracle");
  learn_cmd->add_option("--oracle", o.oracle,
                        "Representation realizing the oracle (default: stdin)");
  learn_cmd->add_option("--lattice", o.lattice, "Lattice file or name");
  learn_cmd->add_option("--max-rounds", o.max_rounds, "Round limit")
      ->check(CLI::PositiveNumber);
  add_format(learn_cmd);

  auto* eq_cmd = app.add_subcommand("to-equalities", "Commutator equalities");
  add_rep(eq_cmd);
  eq_cmd->add_flag("--reduced", o.reduced,
                   "Drop equalities entailed under HC1 and HC2");

  add_rep(app.add_subcommand("to-extended-equalities",
                             "Extended commutator equalities"));

  auto* from_cmd = app.add_subcommand(
      "from-equalities", "Largest representation satisfying equalities");
  from_cmd->add_option("--equalities", o.equalities,
                       "Equality file (default: stdin)");
  from_cmd->add_option("--lattice", o.lattice, "Lattice file or name");
  from_cmd->add_flag("--assume-hc12", o.assume_hc12,
                     "Largest among functions with HC1 and HC2");
  add_format(from_cmd);

  auto* ex_cmd = app.add_subcommand("example", "Built-in example representation");
  ex_cmd->add_option("name", o.example, "div52, B or B7")
      ->required()
      ->check(CLI::IsMember(example_names()));
  add_format(ex_cmd);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hcrep: " << e.what() << '\n';
    return kExitParse;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    Session s(o, in, out);
    return s.dispatch(cmd);
  } catch (const ParseError& e) {
    err << "hcrep: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "hcrep: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace hcrep::cli
