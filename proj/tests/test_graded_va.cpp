#include <doctest.h>

#include "vxa/graded_va.hpp"
#include "vxa/heisenberg.hpp"

using namespace vxa;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(rational_of(n, d)); }

WVec random_vec(const GradedVA& G, int degree, ScalarSampler& rng) {
    WVec v;
    for (const auto& w : G.words(degree))
        if (rng.next_int(0, 2) == 0) wvec_add_term(v, w, rng.next_scalar());
    return v;
}
} // namespace

TEST_CASE("degree 0 and 1 pieces recover A and B") {
    std::vector<VertexAlgebroid> families{dim2_nilpotent(q(0)),     dim2_solvable(q(2)),
                                          dim3_nilpotent(q(0), q(1)), dim3_type_b(q(2), q(0)),
                                          dim3_type_c(q(0)),          dim3_type_d(q(1), q(-2))};
    for (auto& V : families) {
        int adim = V.A.dim, bdim = V.b_dim;
        GradedVA G(std::move(V), 3, 6);
        CHECK(G.dim(0) == adim);
        CHECK(G.dim(1) == bdim);
        CHECK(G.certificate(0) == GradedVA::Cert::Exact);
    }
}

TEST_CASE("unit word collapses and the vacuum reduces to itself") {
    GradedVA G(dim2_nilpotent(q(0)), 3, 6);
    WVec unit_word{{Word{WordFactor{1, 1, 0}}, q(1)}};
    CHECK(G.engine().red(unit_word) == G.vacuum());
    CHECK(G.reduce(G.vacuum()) == G.vacuum());
}

TEST_CASE("frozen graded dimensions for dim2_solvable(2)") {
    GradedVA G(dim2_solvable(q(2)), 6, 8);
    // A (x) boson profile: 2 p(n); degree 2 value cross-checked below
    std::vector<int> expect{2, 2, 4, 6, 10, 14, 22};
    for (int n = 0; n <= 6; ++n) {
        CHECK(G.dim(n) == expect[n]);
        CHECK(G.certificate(n) == GradedVA::Cert::Exact);
    }
    // degree-2 cross-check: quotient bound p(2) = 2 plus the radical-ideal
    // dimension at degree 2
    auto quo = G.degree0_ideal_quotient(local_profile(G.bundle().A).radical_basis);
    CHECK(G.dim(2) == quo.dims[2] + quo.ideal_dims[2]);
    CHECK(quo.dims[2] == 2);
}

TEST_CASE("products reproduce the generator tables") {
    GradedVA G(dim2_solvable(q(2)), 5, 8);
    const auto& V = G.bundle();
    WVec b = G.state(V.azero(), gvec_unit(2, 0));
    // b_0 b = 1/2 da
    WVec b0b = G.reduce(G.product(b, 0, b));
    WVec half_da = G.reduce(G.state(V.azero(), gvec_scale(q(1, 2), gvec_unit(2, 1))));
    CHECK(b0b == half_da);
    // b_1 b = a
    CHECK(G.reduce(G.product(b, 1, b)) == G.reduce(G.state(gvec_unit(2, 1), V.bzero())));
    // vacuum property through the unit relation: (1_A)_{-1} v = v
    WVec unit_state = G.state(V.A.unit_vec(), V.bzero());
    ScalarSampler rng(5);
    for (int d = 0; d <= 3; ++d) {
        WVec v = G.reduce(G.engine().red(random_vec(G, d, rng)));
        CHECK(G.reduce(G.product(unit_state, -1, v)) == v);
    }
    // a_{-1} b = a . b for each generator pair (the action relation)
    for (int i = 0; i < V.A.dim; ++i)
        for (int g = 0; g < V.b_dim; ++g) {
            WVec ai = G.state(V.a_basis(i), V.bzero());
            WVec bg = G.state(V.azero(), V.b_basis(g));
            WVec lhs = G.reduce(G.product(ai, -1, bg));
            WVec rhs = G.reduce(G.state(V.azero(), V.action[i][g]));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("translation operator") {
    GradedVA G(dim2_solvable(q(2)), 5, 8);
    const auto& V = G.bundle();
    CHECK(G.translation(G.vacuum()).empty());
    // D a = del(a) in degree 1
    WVec a = G.state(V.a_basis(1), V.bzero());
    CHECK(G.reduce(G.translation(a)) == G.reduce(G.state(V.azero(), V.del[1])));
    // D(b(-1)|0>) = b(-2)|0>
    WVec b = G.state(V.azero(), V.b_basis(0));
    CHECK(G.translation(b) == WVec{{Word{WordFactor{2, 0, 0}}, q(1)}});
    // translation compatibility: (Du)_n v = -n u_(n-1) v
    ScalarSampler rng(6);
    for (int du = 0; du <= 1; ++du) {
        WVec u = du == 0 ? a : b;
        WVec Du = G.translation(u);
        for (int dv = 0; dv <= 2; ++dv) {
            WVec v = G.reduce(G.engine().red(random_vec(G, dv, rng)));
            if (v.empty()) continue;
            for (long n = -3; n <= 3; ++n) {
                int target = du + 1 + dv - static_cast<int>(n) - 1;
                if (target < 0 || target > G.max_degree()) continue;
                WVec lhs = G.reduce(G.product(Du, n, v));
                WVec rhs = G.reduce(wvec_scale(q(-n), G.product(u, n - 1, v)));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("reduction is idempotent and linear") {
    GradedVA G(dim3_type_c(q(0)), 4, 8);
    ScalarSampler rng(9);
    for (int d = 0; d <= 4; ++d)
        for (int t = 0; t < 25; ++t) {
            WVec u = G.engine().red(random_vec(G, d, rng));
            WVec v = G.engine().red(random_vec(G, d, rng));
            GaussianRational x = rng.next_scalar(), y = rng.next_scalar();
            WVec ru = G.reduce(u);
            CHECK(G.reduce(ru) == ru);
            WVec comb;
            wvec_axpy(comb, x, u);
            wvec_axpy(comb, y, v);
            WVec expect;
            wvec_axpy(expect, x, G.reduce(u));
            wvec_axpy(expect, y, G.reduce(v));
            CHECK(G.reduce(comb) == G.reduce(expect));
        }
}

TEST_CASE("skew symmetry on generator pairs") {
    for (auto& V : {dim2_solvable(q(2)), dim2_nilpotent(q(1)), dim3_type_c(q(0))}) {
        int adim = V.A.dim, bdim = V.b_dim;
        GradedVA G(V, 4, 8);
        std::vector<WVec> gens;
        std::vector<int> degs;
        for (int i = 0; i < adim; ++i) {
            gens.push_back(G.state(gvec_unit(adim, i), gvec_zero(bdim)));
            degs.push_back(0);
        }
        for (int g = 0; g < bdim; ++g) {
            gens.push_back(G.state(gvec_zero(adim), gvec_unit(bdim, g)));
            degs.push_back(1);
        }
        for (size_t i = 0; i < gens.size(); ++i)
            for (size_t j = 0; j < gens.size(); ++j)
                for (long n = degs[i] + degs[j] - 1; degs[i] + degs[j] - n - 1 <= G.max_degree();
                     --n)
                    CHECK(G.check_skew_symmetry(gens[i], gens[j], n));
    }
}

TEST_CASE("commutator formula on generator pairs") {
    GradedVA G(dim2_solvable(q(2)), 4, 8);
    const auto& V = G.bundle();
    std::vector<detail::CElem> gens;
    for (int i = 0; i < V.A.dim; ++i) gens.push_back({V.a_basis(i), V.bzero()});
    for (int g = 0; g < V.b_dim; ++g) gens.push_back({V.azero(), V.b_basis(g)});
    // sample words: vacuum, b(-1), b(-1)a(-1), b(-2)b(-1)
    std::vector<Word> ws{Word{}, Word{WordFactor{1, 0, 0}},
                         Word{WordFactor{1, 0, 0}, WordFactor{1, 1, 1}},
                         Word{WordFactor{2, 0, 0}, WordFactor{1, 0, 0}}};
    int checked = 0;
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (long m = -2; m <= 2; ++m)
                for (long n = -2; n <= 2; ++n)
                    for (const auto& w : ws) {
                        auto res = G.check_commutator(x, y, m, n, w);
                        if (res) {
                            CHECK(*res);
                            ++checked;
                        }
                    }
    CHECK(checked > 100);
    // the worked example: b(1) b(-1)|0> = a
    WVec lhs = G.engine().act(LMode{0, 0, 1}, G.engine().act(LMode{0, 0, -1}, G.vacuum()));
    CHECK(G.reduce(G.engine().red(lhs)) ==
          G.reduce(G.state(V.a_basis(1), V.bzero())));
}

TEST_CASE("relation span is a mode-stable ideal witness") {
    for (auto& V : {dim2_solvable(q(2)), dim2_nilpotent(q(0)), dim3_type_c(q(0))}) {
        GradedVA G(V, 4, 8);
        std::string wit;
        CHECK(G.verify_mode_stable(G.relations(), &wit));
        auto quo = G.degree0_ideal_quotient(local_profile(G.bundle().A).radical_basis, false);
        CHECK(G.verify_mode_stable(quo.span, &wit));
    }
}

TEST_CASE("radical ideal is nonzero and proper") {
    std::vector<VertexAlgebroid> families{dim2_nilpotent(q(0)),     dim2_solvable(q(2)),
                                          dim3_nilpotent(q(0), q(1)), dim3_type_b(q(2), q(0)),
                                          dim3_type_c(q(0)),          dim3_type_d(q(1), q(-2))};
    for (auto& V : families) {
        int adim = V.A.dim;
        GradedVA G(std::move(V), 4, 8);
        auto quo = G.degree0_ideal_quotient(local_profile(G.bundle().A).radical_basis, false);
        CHECK(quo.dims[0] == 1);           // degree-0 drops to the residue field
        CHECK(quo.ideal_dims[0] == adim - 1);
        bool nonzero = false, proper = false;
        for (int n = 0; n <= 4; ++n) {
            if (quo.ideal_dims[n] > 0) nonzero = true;
            if (quo.dims[n] > 0) proper = true;
        }
        CHECK(nonzero);
        CHECK(proper);
    }
    // empty generating set: identity quotient
    GradedVA G(dim2_solvable(q(2)), 3, 6);
    auto id = G.degree0_ideal_quotient({}, false);
    for (int n = 0; n <= 3; ++n) CHECK(id.dims[n] == G.dim(n));
}

TEST_CASE("dim2_nilpotent(0) radical quotient keeps one class of b in degree 1") {
    GradedVA G(dim2_nilpotent(q(0)), 3, 6);
    auto quo = G.degree0_ideal_quotient(local_profile(G.bundle().A).radical_basis, false);
    CHECK(quo.dims[1] == 1);
    // del(a) lands in the ideal: a is in the ideal and translation preserves it
    WVec da = G.state(G.bundle().azero(), G.bundle().del[1]);
    CHECK(quo.span.contains(G.reduce(da)));
}

TEST_CASE("character table for the radical quotient of dim2_solvable(2)") {
    GradedVA G(dim2_solvable(q(2)), 6, 8);
    auto quo = G.degree0_ideal_quotient(local_profile(G.bundle().A).radical_basis);
    // oracle: brute-force partition enumeration
    for (int n = 0; n <= 6; ++n) {
        CHECK(quo.dims[n] == partition_count_enumerate(n));
        CHECK(quo.certs[n] == GradedVA::Cert::Exact);
    }
}

TEST_CASE("a binding length cap downgrades every certificate") {
    // cap 2 truncates the closure and the spanning set: dims are reported
    // but nothing may claim exactness
    GradedVA small(dim2_solvable(q(2)), 4, 2);
    CHECK(small.cap_hit());
    for (int n = 0; n <= 4; ++n) CHECK(small.certificate(n) == GradedVA::Cert::UpperBound);
    // cap N+1 never binds: word sets are complete and the closure untruncated
    GradedVA full(dim2_solvable(q(2)), 4, 5);
    CHECK(!full.cap_hit());
    for (int n = 0; n <= 4; ++n) {
        CHECK(full.certificate(n) == GradedVA::Cert::Exact);
        CHECK(full.dim(n) == std::vector<int>{2, 2, 4, 6, 10}[n]);
    }
}
