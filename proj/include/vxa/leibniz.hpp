#pragma once

// Left Leibniz algebras from bracket tables: identity checking, cyclicity
// search, and classification of the low-dimensional cyclic non-Lie types.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vxa/linalg.hpp"

namespace vxa {

struct LeibnizAlgebra {
    int dim = 0;
    std::vector<std::vector<GVec>> bracket; // bracket[i][j] = [e_i, e_j]

    GVec apply(const GVec& x, const GVec& y) const {
        if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
            fail("DimMismatch", "element size does not match algebra dimension");
        GVec out(dim);
        for (int i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                gvec_axpy(out, x[i] * y[j], bracket[i][j]);
            }
        }
        return out;
    }
};

inline LeibnizAlgebra new_leibniz(int dim, std::vector<std::vector<GVec>> bracket) {
    if (dim <= 0) fail("DimMismatch", "dimension must be positive");
    if (static_cast<int>(bracket.size()) != dim) fail("DimMismatch", "bracket table has wrong shape");
    for (auto& row : bracket) {
        if (static_cast<int>(row.size()) != dim) fail("DimMismatch", "bracket table has wrong shape");
        for (auto& cell : row)
            if (static_cast<int>(cell.size()) != dim) fail("DimMismatch", "bracket table has wrong shape");
    }
    return LeibnizAlgebra{dim, std::move(bracket)};
}

struct LeibnizWitness {
    bool ok = true;
    std::array<int, 3> triple{0, 0, 0}; // first violating basis triple when !ok
};

// Left Leibniz identity [a,[b,c]] = [[a,b],c] + [b,[a,c]] on all basis triples.
inline LeibnizWitness check_left_leibniz(const LeibnizAlgebra& l) {
    for (int a = 0; a < l.dim; ++a)
        for (int b = 0; b < l.dim; ++b)
            for (int c = 0; c < l.dim; ++c) {
                GVec lhs = l.apply(gvec_unit(l.dim, a), l.bracket[b][c]);
                GVec rhs = gvec_add(l.apply(l.bracket[a][b], gvec_unit(l.dim, c)),
                                    l.apply(gvec_unit(l.dim, b), l.bracket[a][c]));
                if (lhs != rhs) return {false, {a, b, c}};
            }
    return {};
}

inline bool is_lie(const LeibnizAlgebra& l) {
    for (int i = 0; i < l.dim; ++i)
        for (int j = 0; j < l.dim; ++j)
            if (l.bracket[i][j] != gvec_scale(GaussianRational(-1), l.bracket[j][i])) return false;
    return true;
}

struct CyclicForm {
    GVec generator;
    std::vector<GVec> powers;      // b, b^2, ..., b^dim
    GaussianRational c0, c1;       // dim 3: b^4 = c0 b^2 + c1 b^3; dim 2: b^3 = c1 b^2
};

namespace detail {

inline std::optional<CyclicForm> try_generator(const LeibnizAlgebra& l, const GVec& v) {
    std::vector<GVec> powers{v};
    for (int k = 1; k <= l.dim; ++k) powers.push_back(l.apply(v, powers.back()));
    GMat cols(l.dim, GVec(l.dim));
    for (int j = 0; j < l.dim; ++j)
        for (int r = 0; r < l.dim; ++r) cols[r][j] = powers[j][r];
    if (rank(cols) != static_cast<size_t>(l.dim)) return std::nullopt;
    auto rel = solve(cols, powers[l.dim]); // b^(dim+1) over {b, b^2, ..., b^dim}
    if (!rel || !(*rel)[0].is_zero()) return std::nullopt; // no b-component can appear
    CyclicForm f;
    f.generator = v;
    f.powers = std::vector<GVec>(powers.begin(), powers.begin() + l.dim);
    if (l.dim == 2) {
        f.c0 = GaussianRational();
        f.c1 = (*rel)[1];
    } else if (l.dim == 3) {
        f.c0 = (*rel)[1];
        f.c1 = (*rel)[2];
    }
    return f;
}

} // namespace detail

// Budgeted search for a cyclic generator: basis vectors, pairwise sums and
// differences, the all-ones vector, then seeded random small samples. A miss
// is inconclusive rather than a disproof.
inline std::optional<CyclicForm> find_cyclic_generator(const LeibnizAlgebra& l, uint64_t seed = 0) {
    std::vector<GVec> candidates;
    for (int i = 0; i < l.dim; ++i) candidates.push_back(gvec_unit(l.dim, i));
    for (int i = 0; i < l.dim; ++i)
        for (int j = 0; j < l.dim; ++j) {
            if (i == j) continue;
            candidates.push_back(gvec_add(gvec_unit(l.dim, i), gvec_unit(l.dim, j)));
            candidates.push_back(gvec_sub(gvec_unit(l.dim, i), gvec_unit(l.dim, j)));
        }
    candidates.push_back(GVec(l.dim, GaussianRational(1)));
    ScalarSampler rng(seed);
    for (int t = 0; t < 128; ++t) {
        GVec v(l.dim);
        for (auto& x : v) x = GaussianRational(rational_of(rng.next_int(-2, 2)), rational_of(rng.next_int(-1, 1)));
        if (!gvec_is_zero(v)) candidates.push_back(std::move(v));
    }
    for (const auto& v : candidates)
        if (auto f = detail::try_generator(l, v)) return f;
    return std::nullopt;
}

struct CyclicClass {
    std::string tag;                                      // dim2-null, dim2-idem, 3a, 3b, 3c, 3d
    std::optional<GaussianRational> mu;                   // c1^2/c0, dim-3 with c0 != 0
    std::optional<std::array<GaussianRational, 2>> alpha; // both roots of mu = -(alpha+1)^2/alpha
};

// Classification of a cyclic non-Lie left Leibniz algebra of dim 2 or 3 from
// its power relation. mu = c1^2/c0 is invariant under generator rescaling.
inline CyclicClass classify_cyclic(const LeibnizAlgebra& l, uint64_t seed = 0) {
    if (is_lie(l)) fail("IsLie", "bracket is antisymmetric; no cyclic non-Lie structure");
    auto form = find_cyclic_generator(l, seed);
    if (!form) fail("NotCyclicOrInconclusive", "no cyclic generator found within the search budget");
    CyclicClass out;
    if (l.dim == 2) {
        out.tag = form->c1.is_zero() ? "dim2-null" : "dim2-idem";
        return out;
    }
    if (l.dim != 3) fail("NotCyclicOrInconclusive", "classification covers dim 2 and 3 only");
    if (form->c0.is_zero()) {
        out.tag = form->c1.is_zero() ? "3a" : "3d";
        return out;
    }
    GaussianRational mu = form->c1 * form->c1 * form->c0.inv();
    out.mu = mu;
    if (mu == GaussianRational(-4)) {
        out.tag = "3c";
        return out;
    }
    out.tag = "3b";
    // alpha^2 + (2+mu) alpha + 1 = 0; the two roots are alpha and 1/alpha.
    GaussianRational b = GaussianRational(2) + mu;
    GaussianRational disc = b * b - GaussianRational(4);
    if (auto s = disc.sqrt_if_square()) {
        GaussianRational half = GaussianRational(rational_of(1, 2));
        out.alpha = std::array<GaussianRational, 2>{(-b + *s) * half, (-b - *s) * half};
    }
    return out;
}

// Normal-form cyclic algebra on basis {b, b^2, b^3} with b^4 = c0 b^2 + c1 b^3
// (dim 3), or {b, b^2} with b^3 = c1 b^2 (dim 2).
inline LeibnizAlgebra cyclic_normal_form(int dim, const GaussianRational& c0, const GaussianRational& c1) {
    if (dim != 2 && dim != 3) fail("DimMismatch", "normal forms exist for dim 2 and 3 only");
    std::vector<std::vector<GVec>> table(dim, std::vector<GVec>(dim, gvec_zero(dim)));
    if (dim == 2) {
        table[0][0] = gvec_unit(2, 1);
        table[0][1] = gvec_scale(c1, gvec_unit(2, 1));
    } else {
        table[0][0] = gvec_unit(3, 1);
        table[0][1] = gvec_unit(3, 2);
        table[0][2] = gvec_add(gvec_scale(c0, gvec_unit(3, 1)), gvec_scale(c1, gvec_unit(3, 2)));
    }
    return new_leibniz(dim, std::move(table));
}

} // namespace vxa
