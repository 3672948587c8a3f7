#pragma once

// JSON forms of the core structures. Scalars travel as canonical text
// ("1/2-3i"); tables are nested arrays in basis order. Object keys serialize
// sorted, so identical inputs produce byte-identical reports.

#include <json.hpp>

#include "vxa/algebroid.hpp"
#include "vxa/leibniz.hpp"

namespace vxa {

using json = nlohmann::json;

inline json scalar_json(const GaussianRational& g) { return g.str(); }

inline GaussianRational scalar_from(const json& j) {
    if (j.is_number_integer()) return GaussianRational(j.get<long>());
    if (j.is_string()) return GaussianRational::parse(j.get<std::string>());
    fail("BadScalar", "expected a scalar string");
}

inline json gvec_json(const GVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(scalar_json(x));
    return out;
}

inline GVec gvec_from(const json& j, size_t expect) {
    if (!j.is_array() || j.size() != expect) fail("DimMismatch", "bad coefficient vector");
    GVec out;
    for (const auto& x : j) out.push_back(scalar_from(x));
    return out;
}

inline json algebra_json(const FiniteAlgebra& a) {
    json sc = json::array();
    for (int i = 0; i < a.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < a.dim; ++j) row.push_back(gvec_json(a.sc[i][j]));
        sc.push_back(row);
    }
    return json{{"dim", a.dim}, {"labels", a.labels}, {"unit", a.unit}, {"sc", sc}};
}

inline FiniteAlgebra algebra_from(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("sc"))
        fail("BadInput", "algebra object needs dim/labels/unit/sc");
    int dim = j.at("dim").get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels"))
        labels = j.at("labels").get<std::vector<std::string>>();
    else
        for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    int unit = j.value("unit", 0);
    std::vector<std::vector<GVec>> sc(dim, std::vector<GVec>(dim));
    const json& t = j.at("sc");
    if (!t.is_array() || static_cast<int>(t.size()) != dim) fail("DimMismatch", "sc table shape");
    for (int i = 0; i < dim; ++i) {
        if (static_cast<int>(t[i].size()) != dim) fail("DimMismatch", "sc table shape");
        for (int k = 0; k < dim; ++k) sc[i][k] = gvec_from(t[i][k], dim);
    }
    return new_algebra(dim, std::move(labels), unit, std::move(sc));
}

inline json leibniz_json(const LeibnizAlgebra& l) {
    json b = json::array();
    for (int i = 0; i < l.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < l.dim; ++j) row.push_back(gvec_json(l.bracket[i][j]));
        b.push_back(row);
    }
    return json{{"dim", l.dim}, {"bracket", b}};
}

inline LeibnizAlgebra leibniz_from(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("bracket"))
        fail("BadInput", "leibniz object needs dim/bracket");
    int dim = j.at("dim").get<int>();
    std::vector<std::vector<GVec>> b(dim, std::vector<GVec>(dim));
    const json& t = j.at("bracket");
    if (!t.is_array() || static_cast<int>(t.size()) != dim) fail("DimMismatch", "bracket shape");
    for (int i = 0; i < dim; ++i) {
        if (static_cast<int>(t[i].size()) != dim) fail("DimMismatch", "bracket shape");
        for (int k = 0; k < dim; ++k) b[i][k] = gvec_from(t[i][k], dim);
    }
    return new_leibniz(dim, std::move(b));
}

inline json table3_json(const std::vector<std::vector<GVec>>& t) {
    json out = json::array();
    for (const auto& row : t) {
        json r = json::array();
        for (const auto& cell : row) r.push_back(gvec_json(cell));
        out.push_back(r);
    }
    return out;
}

inline std::vector<std::vector<GVec>> table3_from(const json& j, size_t d1, size_t d2, size_t d3) {
    if (!j.is_array() || j.size() != d1) fail("DimMismatch", "table shape");
    std::vector<std::vector<GVec>> out(d1, std::vector<GVec>(d2));
    for (size_t i = 0; i < d1; ++i) {
        if (!j[i].is_array() || j[i].size() != d2) fail("DimMismatch", "table shape");
        for (size_t k = 0; k < d2; ++k) out[i][k] = gvec_from(j[i][k], d3);
    }
    return out;
}

inline json bundle_json(const VertexAlgebroid& v) {
    json del = json::array();
    for (const auto& d : v.del) del.push_back(gvec_json(d));
    return json{{"A", algebra_json(v.A)},
                {"B_dim", v.b_dim},
                {"B_labels", v.b_labels},
                {"del", del},
                {"action", table3_json(v.action)},
                {"bracket0", table3_json(v.bracket)},
                {"pairing1", table3_json(v.pairing)},
                {"anchor", table3_json(v.anchor)}};
}

inline VertexAlgebroid bundle_from(const json& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("B_dim"))
        fail("BadInput", "bundle object needs A/B_dim/del/action/bracket0/pairing1/anchor");
    VertexAlgebroid v;
    v.A = algebra_from(j.at("A"));
    v.b_dim = j.at("B_dim").get<int>();
    if (v.b_dim <= 0) fail("DimMismatch", "B_dim must be positive");
    if (j.contains("B_labels"))
        v.b_labels = j.at("B_labels").get<std::vector<std::string>>();
    else
        for (int i = 0; i < v.b_dim; ++i) v.b_labels.push_back("v" + std::to_string(i));
    const json& del = j.at("del");
    if (!del.is_array() || static_cast<int>(del.size()) != v.A.dim) fail("DimMismatch", "del shape");
    for (const auto& col : del) v.del.push_back(gvec_from(col, v.b_dim));
    size_t ad = v.A.dim, bd = v.b_dim;
    v.action = table3_from(j.at("action"), ad, bd, bd);
    v.bracket = table3_from(j.at("bracket0"), bd, bd, bd);
    v.pairing = table3_from(j.at("pairing1"), bd, bd, ad);
    v.anchor = table3_from(j.at("anchor"), bd, ad, ad);
    return v;
}

// The named family constructors, keyed the way the CLI spells them.
inline VertexAlgebroid make_family(const std::string& name, const json& params) {
    auto get = [&](const char* key, const GaussianRational& dflt) {
        if (!params.is_object() || !params.contains(key)) return dflt;
        return scalar_from(params.at(key));
    };
    GaussianRational zero;
    if (name == "dim2_nilpotent") return dim2_nilpotent(get("beta2", zero));
    if (name == "dim2_solvable") return dim2_solvable(get("alpha2", zero));
    if (name == "dim3_nilpotent") return dim3_nilpotent(get("gamma0", zero), get("gamma1", zero));
    if (name == "dim3_type_b") return dim3_type_b(get("s", GaussianRational(2)), get("gamma1", zero));
    if (name == "dim3_type_c") return dim3_type_c(get("gamma1", zero));
    if (name == "dim3_type_d") return dim3_type_d(get("gamma0", zero), get("gamma1", zero));
    fail("BadFamily", "unknown family '" + name + "'");
}

inline json axiom_report_json(const AxiomReport& rep) {
    json items = json::array();
    for (const auto& it : rep.items) {
        json entry{{"name", it.name}, {"pass", it.pass}};
        if (!it.pass) entry["witness"] = it.witness;
        items.push_back(entry);
    }
    return json{{"ok", rep.ok}, {"identities", items}};
}

} // namespace vxa
