#include "hcrep/io.hpp"

#include <fstream>
#include <memory>

namespace hcrep::io {

namespace {

const Json& field(const Json& j, const char* key, const char* doc) {
  if (!j.is_object()) {
    throw ParseError(std::string(doc) + " must be a JSON object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string(doc) + " lacks the \"" + key + "\" field");
  }
  return *it;
}

const Json& array_field(const Json& j, const char* key, const char* doc) {
  const Json& a = field(j, key, doc);
  if (!a.is_array()) {
    throw ParseError(std::string(doc) + " field \"" + key +
                     "\" must be an array");
  }
  return a;
}

std::size_t parse_index(const Json& j, std::size_t size, const char* what) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() >= size) {
    throw ParseError(std::string(what) + " entry " + j.dump() +
                     " is not an element index");
  }
  return j.get<std::size_t>();
}

Element parse_element(const Json& j, const Lattice& l) {
  if (!j.is_string()) {
    throw ParseError("element " + j.dump() + " must be given by name");
  }
  auto e = l.find(j.get<std::string>());
  if (!e) throw ParseError("unknown lattice element " + j.dump());
  return *e;
}

std::vector<Element> parse_elements(const Json& j, const Lattice& l,
                                    const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Element> out;
  for (const auto& x : j) out.push_back(parse_element(x, l));
  return out;
}

Json names_of(const Lattice& l, std::span<const Element> v) {
  Json a = Json::array();
  for (Element e : v) a.push_back(l.name(e));
  return a;
}

LatticePtr doc_lattice(const Json& j, LatticePtr lattice, const char* doc) {
  if (lattice) return lattice;
  return parse_lattice(field(j, "lattice", doc));
}

std::size_t parse_dimension(const Json& j, const char* doc) {
  const Json& d = field(j, "dimension", doc);
  if (!d.is_number_unsigned()) {
    throw ParseError(std::string(doc) + " dimension must be a nonnegative integer");
  }
  return d.get<std::size_t>();
}

template <class P, class ParseVec>
std::vector<P> parse_points(const Json& j, const Lattice& l, const char* doc,
                            ParseVec parse_vec) {
  std::vector<P> pts;
  for (const auto& p : array_field(j, "points", doc)) {
    auto vec = parse_vec(field(p, "vec", "point"));
    Element value = parse_element(field(p, "value", "point"), l);
    pts.push_back({std::move(vec), value});
  }
  return pts;
}

}  // namespace

Json read_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_json(in);
}

std::vector<std::string> lattice_names() {
  return {"div52", "chain2", "chain3", "diamond"};
}

LatticePtr named_lattice(std::string_view name) {
  if (name == "div52") {
    return std::make_shared<const Lattice>(lattices::divisors(52));
  }
  if (name == "chain2") return std::make_shared<const Lattice>(lattices::chain(2));
  if (name == "chain3") {
    return std::make_shared<const Lattice>(lattices::chain({"0", "alpha", "1"}));
  }
  if (name == "diamond") return std::make_shared<const Lattice>(lattices::diamond());
  throw ParseError("unknown lattice name '" + std::string(name) + "'");
}

LatticePtr parse_lattice(const Json& j) {
  if (j.is_string()) return named_lattice(j.get<std::string>());
  const Json& elems = array_field(j, "elements", "lattice");
  std::vector<std::string> names;
  for (const auto& e : elems) {
    if (!e.is_string()) throw ParseError("element names must be strings");
    names.push_back(e.get<std::string>());
  }
  const std::size_t m = names.size();
  auto square = [&](const Json& t, const char* what) {
    if (!t.is_array() || t.size() != m) {
      throw ParseError(std::string(what) + " must be an " + std::to_string(m) +
                       "x" + std::to_string(m) + " array");
    }
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != m) {
        throw ParseError(std::string(what) + " must be square");
      }
    }
  };
  if (j.contains("leq")) {
    const Json& t = j["leq"];
    square(t, "leq");
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (!t[a][b].is_boolean()) throw ParseError("leq entries must be booleans");
        leq[a][b] = t[a][b].get<bool>();
      }
    }
    return std::make_shared<const Lattice>(
        Lattice::from_order(std::move(names), leq));
  }
  auto table = [&](const char* key) {
    const Json& t = field(j, key, "lattice");
    square(t, key);
    Table out(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) out[a][b] = parse_index(t[a][b], m, key);
    }
    return out;
  };
  Table meet = table("meet");
  Table join = table("join");
  return std::make_shared<const Lattice>(
      Lattice::from_tables(std::move(names), std::move(meet), std::move(join)));
}

Json to_json(const Lattice& l) {
  return Json{{"elements", l.names()},
              {"meet", l.meet_table()},
              {"join", l.join_table()}};
}

ExtNat parse_coord(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return kInf;
  if (j.is_number_unsigned()) return ExtNat(j.get<Coord>());
  throw ParseError("coordinate " + j.dump() +
                   " must be a nonnegative integer or \"inf\"");
}

ExtVec parse_extvec(const Json& j) {
  if (!j.is_array()) throw ParseError("vector " + j.dump() + " must be an array");
  std::vector<ExtNat> c;
  for (const auto& x : j) c.push_back(parse_coord(x));
  return ExtVec(std::move(c));
}

NatVec parse_natvec(const Json& j) {
  ExtVec v = parse_extvec(j);
  if (!v.is_finite()) {
    throw ParseError("vector " + j.dump() + " must have finite coordinates");
  }
  return v.to_nat();
}

Json to_json(const NatVec& v) { return Json(v.coords()); }

Json to_json(const ExtVec& v) {
  Json a = Json::array();
  for (ExtNat c : v) {
    if (c.is_infinite()) {
      a.push_back("inf");
    } else {
      a.push_back(c.value());
    }
  }
  return a;
}

Rep parse_rep(const Json& j, LatticePtr lattice) {
  LatticePtr l = doc_lattice(j, std::move(lattice), "rep");
  const std::size_t d = parse_dimension(j, "rep");
  auto pts = parse_points<Point>(j, *l, "rep", parse_natvec);
  return Rep(l, d, std::move(pts));
}

ExtRep parse_extrep(const Json& j, LatticePtr lattice) {
  LatticePtr l = doc_lattice(j, std::move(lattice), "extrep");
  const std::size_t d = parse_dimension(j, "extrep");
  auto pts = parse_points<ExtPoint>(j, *l, "extrep", parse_extvec);
  return ExtRep(l, d, std::move(pts));
}

Json to_json(const Rep& g) {
  Json pts = Json::array();
  for (const auto& p : g.points()) {
    pts.push_back({{"vec", to_json(p.vec)}, {"value", g.lattice().name(p.value)}});
  }
  return Json{{"dimension", g.dim()},
              {"lattice", to_json(g.lattice())},
              {"points", pts}};
}

Json to_json(const ExtRep& h) {
  Json pts = Json::array();
  for (const auto& p : h.points()) {
    pts.push_back({{"vec", to_json(p.vec)}, {"value", h.lattice().name(p.value)}});
  }
  return Json{{"dimension", h.dim()},
              {"lattice", to_json(h.lattice())},
              {"points", pts}};
}

EqualityDoc parse_equalities(const Json& j, LatticePtr lattice) {
  EqualityDoc doc;
  doc.lattice = doc_lattice(j, std::move(lattice), "equalities");
  const Lattice& l = *doc.lattice;
  for (const auto& e : array_field(j, "equalities", "equalities")) {
    auto args = parse_elements(field(e, "args", "equality"), l, "args");
    Element rhs = parse_element(field(e, "rhs", "equality"), l);
    if (e.contains("S")) {
      doc.extended.emplace_back(parse_elements(e["S"], l, "S"), std::move(args),
                                rhs);
    } else {
      doc.plain.emplace_back(std::move(args), rhs);
    }
  }
  return doc;
}

Json to_json(const Lattice& l, const std::vector<CommEquality>& eqs) {
  Json a = Json::array();
  for (const auto& e : eqs) {
    a.push_back({{"args", names_of(l, e.args)}, {"rhs", l.name(e.rhs)}});
  }
  return Json{{"lattice", to_json(l)}, {"equalities", a}};
}

Json to_json(const Lattice& l, const std::vector<ExtCommEquality>& eqs) {
  Json a = Json::array();
  for (const auto& e : eqs) {
    a.push_back({{"S", names_of(l, e.scope)},
                 {"args", names_of(l, e.args)},
                 {"rhs", l.name(e.rhs)}});
  }
  return Json{{"lattice", to_json(l)}, {"equalities", a}};
}

}  // namespace hcrep::io
