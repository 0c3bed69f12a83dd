#pragma once

#include <string>

#include "json.hpp"
#include "tubular/group.hpp"
#include "tubular/matrix.hpp"

namespace tubular {

using json = nlohmann::ordered_json;

// Scalars are rational strings ("3", "-1/2"); plain JSON integers are also
// accepted on input. Vectors are 2-element arrays, lattices arrays of rows.
json rat_to_json(const Rat& q);
Rat rat_from_json(const json& j);  // throws SyntaxError
json int_to_json(const Int& n);
Int int_from_json(const json& j);  // throws SyntaxError
json vec_to_json(const Vec2& v);
Vec2 vec_from_json(const json& j);
json lattice_to_json(const Lattice2& L);      // canonical basis rows
Lattice2 lattice_from_json(const json& j);    // rows are generators, re-canonicalized
json mat_to_json(const Mat2& M);              // [[a,b],[c,d]]
Mat2 mat_from_json(const json& j);

// {"vertices":[{"id","basis"}],"edges":[{"id","minus","plus","u","v"}]}
// An omitted vertex "basis" means the standard Z^2. Serialization always emits
// the canonical basis, so parse(serialize(G)) == G.
json group_to_json(const TubularGroup& G);
TubularGroup group_from_json(const json& j);  // SyntaxError / SemanticError

TubularGroup parse_group(const std::string& text);
std::string serialize_group(const TubularGroup& G);

}  // namespace tubular
