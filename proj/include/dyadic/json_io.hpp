// JSON encodings shared by the command-line tool and the tests.
#pragma once

#include <json.hpp>

#include "dyadic/universality.hpp"

namespace dyadic {

using nlohmann::json;

json to_json(const SpaceInv& V, const Field& F);
SpaceInv space_from_json(const json& j, const Field& F);

json to_json(const JordanLattice& L, const Field& F);
json to_json(const GramMatrix& G, const Field& F);
json to_json(const RepVerdict& v, const Field& F);
json to_json(const ClassifyVerdict& v, const Field& F);
json to_json(const CrosscheckRecord& r, const Field& F);

/// Either {"gram": [[...]]} or {"jordan": [...]}.
struct ParsedLattice {
    JordanLattice lattice;
    std::optional<GramMatrix> gram;  // present for gram input
};
ParsedLattice lattice_from_json(const json& j, const Field& F);
GramMatrix gram_from_json(const json& rows, const Field& F);

/// Invariant tables: components, ideals, sublattice dimensions, fd_i and Delta_i.
json invariants_report(const JordanLattice& L, const Field& F);

}  // namespace dyadic
