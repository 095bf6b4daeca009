#pragma once

// Wire formats shared by the CLI and any external consumer:
//   triple     {"x":"<poly>","y":"<poly>","z":"<poly>"}
//   word       {"c":"<elt>","word":["<poly>",...],"base":"<poly>"|"AXIS"}
//   matrix     ["<poly>", ...]  nine entries, row-major
//   generator  {"kind":"Mf","f":"t"} | {"kind":"Rf","f":..} | {"kind":"Tc","c":"3"}
//              | {"kind":"Pxy"} | {"kind":"Ud","d":1} | {"kind":"J"}
// Schema violations raise ParseError.

#include <string>
#include <vector>

#include "json.hpp"

#include "pyth/berggren.hpp"
#include "pyth/oracle.hpp"
#include "pyth/orthogroup.hpp"

namespace pyth {

using Json = nlohmann::ordered_json;

Json to_json(const Triple& q);
Json to_json(const BerggrenWord& w);
Json to_json(const Mat3& m);
Json to_json(const Generator& g);
Json to_json(const GeneratorWord& word);
Json to_json(const TreeNode& node);
Json to_json(const CensusReport& report);

Triple triple_from_json(const Json& j, FieldSpec spec);
BerggrenWord word_from_json(const Json& j, FieldSpec spec);
Mat3 matrix_from_json(const Json& j, FieldSpec spec);
Generator generator_from_json(const Json& j, FieldSpec spec);
GeneratorWord generator_word_from_json(const Json& j, FieldSpec spec);

/// Parses text into JSON, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

/// Graphviz digraph: one node per tree node labeled with its triple, one edge
/// per parent link labeled M_{f}.
std::string tree_to_dot(const std::vector<TreeNode>& nodes);

}  // namespace pyth
