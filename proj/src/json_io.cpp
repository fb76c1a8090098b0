#include "dyadic/json_io.hpp"

#include <algorithm>

namespace dyadic {

namespace {

std::string elt_text(const json& j) {
    if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
    if (j.is_string()) return j.get<std::string>();
    throw DomainError("field element must be an integer or a string, got " + j.dump());
}

json ideal_json(const IdealExp& I) {
    if (I.is_zero()) return "zero ideal";
    return I.exp();
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_member(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_number_integer()) throw DomainError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

json to_json(const SpaceInv& V, const Field& F) {
    return {{"dim", V.dim}, {"disc", F.format(V.disc)}, {"hasse", V.hasse}};
}

SpaceInv space_from_json(const json& j, const Field& F) {
    SpaceInv V;
    V.dim = int_member(j, "dim");
    V.disc = F.parse_class(elt_text(member(j, "disc")));
    V.hasse = int_member(j, "hasse");
    if (V.hasse != 1 && V.hasse != -1) throw DomainError("hasse must be 1 or -1");
    if (!is_realizable(V, F)) throw DomainError("space invariants are not realizable");
    return V;
}

json to_json(const JordanLattice& L, const Field& F) {
    json comps = json::array();
    for (const auto& c : L.components()) {
        if (c.proper) {
            json diag = json::array();
            for (SquareClass e : c.diag) diag.push_back(F.format(e));
            comps.push_back({{"scale", c.scale_exp}, {"proper", true}, {"diag", diag}});
        } else {
            comps.push_back({{"scale", c.scale_exp},
                             {"proper", false},
                             {"m", c.half_dim()},
                             {"type", c.type == ImproperType::plain ? "plain" : "delta"}});
        }
    }
    return {{"jordan", comps}};
}

json to_json(const GramMatrix& G, const Field& F) {
    json rows = json::array();
    for (int i = 0; i < G.n; ++i) {
        json row = json::array();
        for (int j = 0; j < G.n; ++j) row.push_back(F.format(G.at(i, j)));
        rows.push_back(row);
    }
    return {{"gram", rows}};
}

json to_json(const RepVerdict& v, const Field& F) {
    json out = {{"value", to_string(v.value)}, {"reason", v.reason}};
    if (!v.witness.empty()) {
        json rows = json::array();
        for (int i = 0; i < v.witness_rows; ++i) {
            json row = json::array();
            for (int j = 0; j < v.witness_cols; ++j) row.push_back(F.format(v.witness[i * v.witness_cols + j]));
            rows.push_back(row);
        }
        out["witness"] = rows;
    }
    return out;
}

json to_json(const ClassifyVerdict& v, const Field& F) {
    json out = {{"value", v.value}, {"clause", v.clause}};
    if (v.witness) out["witness"] = to_json(*v.witness, F);
    return out;
}

json to_json(const CrosscheckRecord& r, const Field& F) {
    return {{"lattice", to_json(r.lattice, F)},
            {"classifier", to_json(r.classifier, F)},
            {"oracle", to_json(r.oracle, F)},
            {"agree", r.agree}};
}

GramMatrix gram_from_json(const json& rows, const Field& F) {
    if (!rows.is_array()) throw DomainError("gram must be an array of rows");
    GramMatrix G;
    G.n = static_cast<int>(rows.size());
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != G.n) throw DomainError("gram must be square");
        for (const auto& x : row) G.entries.push_back(F.parse(elt_text(x)));
    }
    return G;
}

ParsedLattice lattice_from_json(const json& j, const Field& F) {
    if (!j.is_object()) throw DomainError("lattice must be a JSON object");
    if (j.contains("gram")) {
        GramMatrix G = gram_from_json(j.at("gram"), F);
        JordanLattice L = jordan_split(G, F);
        return {std::move(L), std::move(G)};
    }
    const json& comps = member(j, "jordan");
    if (!comps.is_array()) throw DomainError("jordan must be an array");
    std::vector<JordanComponent> out;
    for (const auto& c : comps) {
        const int scale = int_member(c, "scale");
        const json& proper = member(c, "proper");
        if (!proper.is_boolean()) throw DomainError("field 'proper' must be a boolean");
        if (proper.get<bool>()) {
            const json& diag = member(c, "diag");
            if (!diag.is_array()) throw DomainError("diag must be an array");
            std::vector<SquareClass> cls;
            for (const auto& e : diag) {
                const FieldElt x = F.parse(elt_text(e));
                if (F.is_zero(x) || *F.valuation(x) != 0)
                    throw DomainError("diagonal entries of a proper component must be units");
                cls.push_back(F.square_class(x));
            }
            out.push_back(JordanComponent::make_proper(scale, std::move(cls)));
            if (out.back().dim == 0) throw DomainError("proper component with empty diagonal");
        } else {
            const int m = int_member(c, "m");
            if (m < 1) throw DomainError("improper component needs m >= 1");
            const json& type = member(c, "type");
            if (type != "plain" && type != "delta") throw DomainError("type must be \"plain\" or \"delta\"");
            out.push_back(JordanComponent::make_improper(
                scale, m, type == "plain" ? ImproperType::plain : ImproperType::delta));
        }
    }
    return {JordanLattice(std::move(out), F), std::nullopt};
}

json invariants_report(const JordanLattice& L, const Field& F) {
    json comps = json::array();
    for (const auto& c : L.components()) {
        const SpaceInv V = component_space(c, F);
        json jc = {{"scale", c.scale_exp}, {"norm", c.norm_exp()}, {"dim", c.dim}, {"proper", c.proper},
                   {"space", to_json(V, F)}, {"signed_disc", F.format(signed_disc(V, F))}};
        if (c.proper) {
            json diag = json::array();
            for (SquareClass e : c.diag) diag.push_back(F.format(e));
            jc["diag"] = diag;
        } else {
            jc["m"] = c.half_dim();
            jc["type"] = c.type == ImproperType::plain ? "plain" : "delta";
        }
        comps.push_back(jc);
    }
    json out = {{"components", comps},
                {"dim", L.dim()},
                {"scale", ideal_json(scale_ideal(L))},
                {"norm", ideal_json(norm_ideal(L))},
                {"integral", is_integral(L)},
                {"classic", is_classic(L)},
                {"space", to_json(space_of(L, F), F)}};
    json table = json::array();
    if (!L.empty()) {
        const int lo = L.components().front().scale_exp - 2;
        const int hi = L.components().back().scale_exp + 2;
        for (int i = lo; i <= hi; ++i) {
            table.push_back({{"i", i},
                             {"dim_le", sublattice(L, i, SubKind::le).dim()},
                             {"dim_paren", sublattice(L, i, SubKind::paren).dim()},
                             {"dim_bracket", sublattice(L, i, SubKind::bracket).dim()},
                             {"fd", ideal_json(fd_ideal(L, i))},
                             {"Delta", ideal_json(delta_ideal(L, i))}});
        }
    }
    out["table"] = table;
    return out;
}

}  // namespace dyadic
