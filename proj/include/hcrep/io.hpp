#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hcrep/antitone.hpp"
#include "hcrep/commutator.hpp"

namespace hcrep::io {

using Json = nlohmann::ordered_json;

// Document formats
//
//   lattice   {"elements": [...], "meet": [[..]], "join": [[..]]}
//             {"elements": [...], "leq": [[bool..]]}
//             or one of the names "div52", "chain2", "chain3", "diamond"
//   rep       {"dimension": d, "lattice": <lattice>,
//              "points": [{"vec": [10, 20], "value": "26"}, ...]}
//   extrep    same as rep, coordinates may be "inf"
//   equations {"lattice": <lattice>,
//              "equalities": [{"S": [..], "args": [..], "rhs": ".."}, ...]}
//             "S" is optional and marks an extended equality.
//
// Every reader throws ParseError for malformed documents; lattice axiom
// violations surface as DomainError.

Json read_json(std::istream& in);
Json read_json_file(const std::string& path);

LatticePtr named_lattice(std::string_view name);
std::vector<std::string> lattice_names();

LatticePtr parse_lattice(const Json& j);
Json to_json(const Lattice& l);

/// A null `lattice` means the document's own "lattice" field is used.
Rep parse_rep(const Json& j, LatticePtr lattice = nullptr);
ExtRep parse_extrep(const Json& j, LatticePtr lattice = nullptr);
Json to_json(const Rep& g);
Json to_json(const ExtRep& h);

ExtNat parse_coord(const Json& j);
ExtVec parse_extvec(const Json& j);
NatVec parse_natvec(const Json& j);
Json to_json(const NatVec& v);
Json to_json(const ExtVec& v);

struct EqualityDoc {
  LatticePtr lattice;
  std::vector<CommEquality> plain;
  std::vector<ExtCommEquality> extended;
};

EqualityDoc parse_equalities(const Json& j, LatticePtr lattice = nullptr);
Json to_json(const Lattice& l, const std::vector<CommEquality>& eqs);
Json to_json(const Lattice& l, const std::vector<ExtCommEquality>& eqs);

}  // namespace hcrep::io
