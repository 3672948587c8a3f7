// Command-line front end: construct the classified vertex algebroid families,
// verify bundle axioms, classify Leibniz brackets, build graded truncations,
// take ideal quotients, inspect modules, and run the free-boson comparison.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "vxa/graded_va.hpp"
#include "vxa/heisenberg.hpp"
#include "vxa/induced_module.hpp"
#include "vxa/io_json.hpp"

using namespace vxa;

namespace {

int error_exit_code(const std::string& code) {
    static const std::set<std::string> input_errors{"BadScalar",   "BadInput",       "BadFamily",
                                                    "BadParameter", "DimMismatch",    "UnknownTemplate",
                                                    "BadJson",      "DegreeOverflow"};
    return input_errors.count(code) ? 2 : 1;
}

json read_json_input(const std::string& path) {
    try {
        if (path.empty() || path == "-") {
            return json::parse(std::cin);
        }
        std::ifstream in(path);
        if (!in) fail("BadInput", "cannot open '" + path + "'");
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail("BadJson", e.what());
    }
}

json parse_params(const std::string& text) {
    if (text.empty()) return json::object();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail("BadJson", std::string("--params: ") + e.what());
    }
}

VertexAlgebroid load_bundle(const std::string& family, const std::string& params,
                            const std::string& input) {
    if (!family.empty()) return make_family(family, parse_params(params));
    return bundle_from(read_json_input(input));
}

const char* cert_name(GradedVA::Cert c) {
    return c == GradedVA::Cert::Exact ? "exact" : "upper";
}

void print_character_table(const std::vector<int>& dims, const std::vector<GradedVA::Cert>& certs) {
    std::cout << "degree  dim  certificate\n";
    for (size_t n = 0; n < dims.size(); ++n)
        std::cout << n << "       " << dims[n] << "    " << cert_name(certs[n]) << "\n";
}

json character_json(const std::vector<int>& dims, const std::vector<GradedVA::Cert>& certs) {
    json out = json::array();
    for (size_t n = 0; n < dims.size(); ++n)
        out.push_back(json{{"degree", n}, {"dim", dims[n]}, {"certificate", cert_name(certs[n])}});
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact vertex-algebroid toolkit"};
    app.require_subcommand(1);

    std::string family, params, input = "-", lambda_text = "0", ideal = "radical";
    int degree = 6, cap = 8;
    uint64_t seed = 0;
    bool as_json = false;

    int rc = 0;
    auto guarded = [&](auto&& fn) {
        return [&, fn]() {
            try {
                rc = fn();
            } catch (const Error& e) {
                std::cerr << e.what() << "\n";
                rc = error_exit_code(e.code());
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                rc = 2;
            }
        };
    };

    auto* c_verify_alg = app.add_subcommand("verify-algebra", "validate a structure-constant table");
    c_verify_alg->add_option("--input", input, "JSON file, or - for stdin");
    c_verify_alg->callback(guarded([&]() {
        json j = read_json_input(input);
        FiniteAlgebra a = algebra_from(j); // throws with the violated tuple
        std::cout << json{{"ok", true}, {"dim", a.dim}}.dump() << "\n";
        return 0;
    }));

    auto* c_verify_lei = app.add_subcommand("verify-leibniz", "check the left Leibniz identity");
    c_verify_lei->add_option("--input", input, "JSON file, or - for stdin");
    c_verify_lei->callback(guarded([&]() {
        LeibnizAlgebra l = leibniz_from(read_json_input(input));
        auto w = check_left_leibniz(l);
        json out{{"ok", w.ok}, {"is_lie", w.ok ? is_lie(l) : false}};
        if (!w.ok) out["witness"] = {w.triple[0], w.triple[1], w.triple[2]};
        std::cout << out.dump() << "\n";
        return w.ok ? 0 : 1;
    }));

    auto* c_classify = app.add_subcommand("classify-leibniz", "cyclic classification of a bracket");
    c_classify->add_option("--input", input, "JSON file, or - for stdin");
    c_classify->add_option("--seed", seed, "search seed");
    c_classify->callback(guarded([&]() {
        LeibnizAlgebra l = leibniz_from(read_json_input(input));
        auto w = check_left_leibniz(l);
        if (!w.ok) fail("NotLeibniz", "the bracket fails the left Leibniz identity");
        auto cls = classify_cyclic(l, seed);
        auto form = find_cyclic_generator(l, seed);
        json out{{"tag", cls.tag}};
        if (cls.mu) out["mu"] = scalar_json(*cls.mu);
        if (cls.alpha)
            out["alpha"] = {scalar_json((*cls.alpha)[0]), scalar_json((*cls.alpha)[1])};
        if (form) {
            out["relation"] = {{"c0", scalar_json(form->c0)}, {"c1", scalar_json(form->c1)}};
            out["generator"] = gvec_json(form->generator);
        }
        std::cout << out.dump() << "\n";
        return 0;
    }));

    auto* c_construct = app.add_subcommand("construct", "emit a classified family bundle");
    c_construct->add_option("--family", family, "family name")->required();
    c_construct->add_option("--params", params, "JSON parameter object");
    c_construct->callback(guarded([&]() {
        std::cout << bundle_json(make_family(family, parse_params(params))).dump() << "\n";
        return 0;
    }));

    auto* c_axioms = app.add_subcommand("verify-axioms", "run the full bundle identity suite");
    c_axioms->add_option("--input", input, "bundle JSON file, or - for stdin");
    c_axioms->add_option("--family", family, "construct a family instead of reading input");
    c_axioms->add_option("--params", params, "family parameters");
    c_axioms->callback(guarded([&]() {
        VertexAlgebroid v = load_bundle(family, params, input);
        auto rep = check_axioms(v);
        std::cout << axiom_report_json(rep).dump() << "\n";
        return rep.ok ? 0 : 1;
    }));

    auto* c_quotient_lie = app.add_subcommand("quotient-lie-algebroid", "B / A.del(A) data");
    c_quotient_lie->add_option("--input", input, "bundle JSON file, or - for stdin");
    c_quotient_lie->add_option("--family", family, "family name");
    c_quotient_lie->add_option("--params", params, "family parameters");
    c_quotient_lie->callback(guarded([&]() {
        VertexAlgebroid v = load_bundle(family, params, input);
        LieAlgebroid q = lie_algebroid_quotient(v);
        json act = json::array(), anc = json::array();
        for (int a = 0; a < v.A.dim; ++a) act.push_back(gvec_json(q.action[a][0]));
        for (int j = 0; j < v.A.dim; ++j) anc.push_back(gvec_json(q.anchor[0][j]));
        std::cout << json{{"q_dim", q.q_dim},
                          {"ideal_dim", q.ideal.dim()},
                          {"action_on_class", act},
                          {"anchor_of_class", anc}}
                         .dump()
                  << "\n";
        return 0;
    }));

    auto* c_modules = app.add_subcommand("modules", "one-dimensional module family and verifier");
    c_modules->add_option("--input", input, "bundle JSON file, or - for stdin");
    c_modules->add_option("--family", family, "family name");
    c_modules->add_option("--params", params, "family parameters");
    c_modules->add_option("--lambda", lambda_text, "weight of the class of b");
    c_modules->add_option("--degree", degree, "truncation degree for L(U)");
    c_modules->callback(guarded([&]() {
        VertexAlgebroid v = load_bundle(family, params, input);
        GaussianRational lambda = GaussianRational::parse(lambda_text);
        GVec phi = forced_character(v);
        auto check = verify_one_dim_module(v, lambda, phi);
        json items = json::array();
        for (const auto& it : check.items)
            items.push_back(json{{"name", it.name}, {"pass", it.pass}});
        json out{{"lambda", scalar_json(lambda)}, {"phi", gvec_json(phi)}, {"pass", check.pass},
                 {"checks", items}};
        if (check.pass && degree >= 1) {
            GradedVA G(v, degree, degree + 2);
            InducedModule M(G, lambda);
            auto rep = M.report();
            out["m_dims"] = rep.m_dims;
            out["mb_dims"] = rep.mb_dims;
            out["l_dims"] = rep.l_dims;
            out["j_dims"] = rep.j_dims;
            out["j_methods_agree"] = rep.methods_agree;
        }
        std::cout << out.dump() << "\n";
        return check.pass ? 0 : 1;
    }));

    auto* c_derive = app.add_subcommand("derive-dim3", "dim-3 constraint record");
    c_derive->add_option("--params", params, "{c0, c1, gamma0, gamma1}")->required();
    c_derive->callback(guarded([&]() {
        json p = parse_params(params);
        auto d = derive_dim3_constraints(scalar_from(p.at("c0")), scalar_from(p.at("c1")),
                                         scalar_from(p.at("gamma0")), scalar_from(p.at("gamma1")),
                                         false);
        json out{{"consistent", d.consistent},
                 {"P", scalar_json(d.P)},
                 {"beta", scalar_json(d.beta)},
                 {"chi", scalar_json(d.chi)},
                 {"a_star_a", gvec_json(d.a_star_a)},
                 {"a_star_b0a", gvec_json(d.a_star_b0a)},
                 {"a_dot_del_a", gvec_json(d.a_dot_del_a)}};
        std::cout << out.dump() << "\n";
        return d.consistent ? 0 : 1;
    }));

    auto add_va_options = [&](CLI::App* c) {
        c->add_option("--input", input, "bundle JSON file, or - for stdin");
        c->add_option("--family", family, "family name");
        c->add_option("--params", params, "family parameters");
        c->add_option("--degree", degree, "truncation degree (default 6)");
        c->add_option("--cap", cap, "word length cap (default 8)");
        c->add_flag("--json", as_json, "emit the JSON report");
    };

    auto* c_build = app.add_subcommand("build-va", "graded truncation with certificates");
    add_va_options(c_build);
    c_build->callback(guarded([&]() {
        GradedVA G(load_bundle(family, params, input), degree, cap);
        std::vector<int> dims;
        std::vector<GradedVA::Cert> certs;
        for (int n = 0; n <= degree; ++n) {
            dims.push_back(G.dim(n));
            certs.push_back(G.certificate(n));
        }
        print_character_table(dims, certs);
        if (as_json)
            std::cout << json{{"axioms_ok", G.axioms_ok()},
                              {"cap_hit", G.cap_hit()},
                              {"character", character_json(dims, certs)}}
                             .dump()
                      << "\n";
        return 0;
    }));

    auto* c_char = app.add_subcommand("character", "per-degree dimension table");
    add_va_options(c_char);
    c_char->callback(guarded([&]() {
        GradedVA G(load_bundle(family, params, input), degree, cap);
        std::vector<int> dims;
        std::vector<GradedVA::Cert> certs;
        for (int n = 0; n <= degree; ++n) {
            dims.push_back(G.dim(n));
            certs.push_back(G.certificate(n));
        }
        if (as_json)
            std::cout << character_json(dims, certs).dump() << "\n";
        else
            print_character_table(dims, certs);
        return 0;
    }));

    auto* c_quot = app.add_subcommand("quotient", "quotient by the degree-0 radical ideal");
    add_va_options(c_quot);
    c_quot->add_option("--ideal", ideal, "generating set (only 'radical')");
    c_quot->callback(guarded([&]() {
        if (ideal != "radical") fail("BadInput", "only --ideal radical is supported");
        GradedVA G(load_bundle(family, params, input), degree, cap);
        auto prof = local_profile(G.bundle().A);
        auto quo = G.degree0_ideal_quotient(prof.radical_basis);
        if (as_json)
            std::cout << json{{"axioms_ok", G.axioms_ok()},
                              {"character", character_json(quo.dims, quo.certs)},
                              {"ideal_dims", quo.ideal_dims}}
                             .dump()
                      << "\n";
        else
            print_character_table(quo.dims, quo.certs);
        return 0;
    }));

    auto* c_heis = app.add_subcommand("heis-check", "free boson comparison of the radical quotient");
    add_va_options(c_heis);
    c_heis->callback(guarded([&]() {
        auto rep = heisenberg_check(load_bundle(family, params, input), degree, cap);
        json out{{"pass", rep.pass},
                 {"axioms_ok", rep.axioms_ok},
                 {"residue", scalar_json(rep.residue)},
                 {"sqrt_missing", rep.sqrt_missing},
                 {"quotient_dims", rep.quotient_dims},
                 {"expected", rep.expected},
                 {"dims_exact", rep.dims_exact},
                 {"bijective", rep.bijective},
                 {"intertwine_checked", rep.intertwine_checked}};
        if (rep.rescale) out["rescale"] = scalar_json(*rep.rescale);
        if (!rep.first_failure.empty()) out["first_failure"] = rep.first_failure;
        std::cout << out.dump() << "\n";
        return rep.pass ? 0 : 1;
    }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return rc;
}
