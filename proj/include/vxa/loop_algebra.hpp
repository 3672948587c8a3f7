#pragma once

// The Z-graded Lie algebra obtained by looping A (+) B and quotienting by the
// image of the twisted derivation a x t^m |-> del(a) x t^m + m a x t^(m-1).
// Elements are kept in a canonical form in which that image is zero:
//   - A-modes exist only at level -1 (every other level folds into a B-mode),
//   - level-0 B-modes are reduced modulo del(A).

#include <compare>
#include <vector>

#include "vxa/algebroid.hpp"

namespace vxa {

struct LMode {
    int8_t kind = 0; // 0 = B generator, 1 = A generator
    int16_t gen = 0;
    int32_t level = 0;
    auto operator<=>(const LMode&) const = default;
};

struct LTerm {
    LMode mode;
    GaussianRational coeff;
    bool operator==(const LTerm&) const = default;
};
using LElem = std::vector<LTerm>;

// degree of x(n): n -> -n for B, -n-1 for A
inline int lmode_degree(const LMode& m) {
    return m.kind == 0 ? -static_cast<int>(m.level) : -static_cast<int>(m.level) - 1;
}

class LoopAlgebra {
public:
    LoopAlgebra(VertexAlgebroid bundle, int window)
        : V_(std::move(bundle)), window_(window), del_span_(V_.b_dim) {
        for (int j = 0; j < V_.A.dim; ++j) del_span_.add(V_.del[j]);
        comp_cols_ = del_span_.complement_cols();
    }

    const VertexAlgebroid& bundle() const { return V_; }
    int window() const { return window_; }
    const std::vector<size_t>& level0_complement() const { return comp_cols_; }

    // Canonicalize an A-layer contribution: coefficients over the A basis at
    // t-level p. At p != -1 it folds to -(1/(p+1)) del(a) at level p+1.
    LElem a_layer(const GVec& coeffs, int level) const {
        LElem out;
        if (level == -1) {
            for (int j = 0; j < V_.A.dim; ++j)
                if (!coeffs[j].is_zero())
                    out.push_back({LMode{1, static_cast<int16_t>(j), -1}, coeffs[j]});
            return out;
        }
        GaussianRational c = -GaussianRational(level + 1).inv();
        return b_layer(gvec_scale(c, V_.del_of(coeffs)), level + 1);
    }

    // Canonicalize a B-layer contribution at t-level n; at n = 0 reduce
    // modulo del(A).
    LElem b_layer(const GVec& coeffs, int level) const {
        LElem out;
        GVec v = coeffs;
        if (level == 0) v = del_span_.reduce(v);
        for (int g = 0; g < V_.b_dim; ++g)
            if (!v[g].is_zero())
                out.push_back({LMode{0, static_cast<int16_t>(g), level}, v[g]});
        return out;
    }

    static LElem merge(LElem a, const LElem& b) {
        for (const auto& t : b) a.push_back(t);
        return normalize(std::move(a));
    }

    static LElem normalize(LElem e) {
        std::map<LMode, GaussianRational> m;
        for (auto& t : e) m[t.mode] += t.coeff;
        LElem out;
        for (auto& [mode, c] : m)
            if (!c.is_zero()) out.push_back({mode, c});
        return out;
    }

    // Lie bracket of two canonical modes, canonicalized.
    LElem bracket(const LMode& x, const LMode& y) const {
        if (x.kind == 1 && y.kind == 1) return {};
        if (x.kind == 1 && y.kind == 0) {
            // [a(m), b(n)] = (a_0 b)(m+n) with a_0 u = -pi(u)(a)
            GVec a0b = gvec_scale(GaussianRational(-1), V_.anchor[y.gen][x.gen]);
            return a_layer(a0b, x.level + y.level);
        }
        if (x.kind == 0 && y.kind == 1) {
            return a_layer(V_.anchor[x.gen][y.gen], x.level + y.level);
        }
        // [b(m), b'(n)] = (b_0 b')(m+n) + m (b_1 b')(m+n-1)
        LElem out = b_layer(V_.bracket[x.gen][y.gen], x.level + y.level);
        if (x.level != 0) {
            GVec p = gvec_scale(GaussianRational(x.level), V_.pairing[x.gen][y.gen]);
            out = merge(std::move(out), a_layer(p, x.level + y.level - 1));
        }
        return normalize(std::move(out));
    }

    LElem bracket(const LElem& x, const LMode& y) const {
        LElem out;
        for (const auto& t : x)
            for (auto& r : bracket(t.mode, y)) out.push_back({r.mode, r.coeff * t.coeff});
        return out;
    }

    // Canonical basis of the degree-n piece (for windowed inspection).
    std::vector<LMode> degree_basis(int n) const {
        std::vector<LMode> out;
        if (n == 0) {
            for (auto c : comp_cols_) out.push_back({0, static_cast<int16_t>(c), 0});
            for (int j = 0; j < V_.A.dim; ++j) out.push_back({1, static_cast<int16_t>(j), -1});
        } else {
            for (int g = 0; g < V_.b_dim; ++g) out.push_back({0, static_cast<int16_t>(g), -n});
        }
        return out;
    }

private:
    VertexAlgebroid V_;
    int window_;
    RowSpan del_span_;
    std::vector<size_t> comp_cols_;
};

} // namespace vxa
