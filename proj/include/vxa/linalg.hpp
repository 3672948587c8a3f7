#pragma once

// Dense exact linear algebra over Q(i). Everything here is small (dim <= 8
// for algebra/bracket tables, a few hundred for graded pieces), so plain
// fraction-free-less Gaussian elimination is fine.

#include <map>
#include <optional>
#include <vector>

#include "vxa/scalar.hpp"

namespace vxa {

using GVec = std::vector<GaussianRational>;
using GMat = std::vector<GVec>;

inline GVec gvec_zero(size_t n) { return GVec(n); }

inline bool gvec_is_zero(const GVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline GVec gvec_unit(size_t n, size_t k) {
    GVec v(n);
    v[k] = GaussianRational(1);
    return v;
}

inline GVec& gvec_axpy(GVec& y, const GaussianRational& a, const GVec& x) {
    for (size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
    return y;
}

inline GVec gvec_add(GVec a, const GVec& b) {
    for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

inline GVec gvec_sub(GVec a, const GVec& b) {
    for (size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

inline GVec gvec_scale(const GaussianRational& c, GVec v) {
    for (auto& x : v) x *= c;
    return v;
}

// Row-reduce in place; returns the pivot column of each final nonzero row.
inline std::vector<size_t> rref(GMat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        GaussianRational inv = m[row][col].inv();
        for (auto& x : m[row]) x *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r != row && !m[r][col].is_zero()) {
                GaussianRational c = m[r][col];
                for (size_t k = 0; k < cols; ++k) m[r][k] -= c * m[row][k];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(pivots.size());
    return pivots;
}

inline size_t rank(GMat m) { return rref(m).size(); }

// Basis of {x : M x = 0} (right kernel).
inline std::vector<GVec> kernel(GMat m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<GVec> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        GVec v(cols);
        v[free_col] = GaussianRational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of M x = b, if any.
inline std::optional<GVec> solve(const GMat& m, const GVec& b) {
    if (m.empty()) return gvec_is_zero(b) ? std::optional<GVec>(GVec{}) : std::nullopt;
    size_t cols = m[0].size();
    GMat aug = m;
    for (size_t r = 0; r < m.size(); ++r) aug[r].push_back(b[r]);
    auto pivots = rref(aug);
    GVec x(cols);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt; // pivot in the augmented column
        x[pivots[r]] = aug[r][cols];
    }
    return x;
}

// Incrementally maintained reduced row space; pivot = leftmost nonzero entry.
class RowSpan {
public:
    RowSpan() : cols_(0) {}
    explicit RowSpan(size_t cols) : cols_(cols) {}

    size_t dim() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    GVec reduce(GVec v) const {
        for (const auto& [piv, row] : rows_) {
            if (!v[piv].is_zero()) {
                GaussianRational c = v[piv];
                for (size_t k = piv; k < cols_; ++k) v[k] -= c * row[k];
            }
        }
        return v;
    }

    bool contains(const GVec& v) const { return gvec_is_zero(reduce(v)); }

    // Adds v to the span; returns true when the dimension grew.
    bool add(GVec v) {
        v = reduce(std::move(v));
        size_t piv = 0;
        while (piv < cols_ && v[piv].is_zero()) ++piv;
        if (piv == cols_) return false;
        GaussianRational inv = v[piv].inv();
        for (auto& x : v) x *= inv;
        for (auto& [p, row] : rows_) {
            if (!row[piv].is_zero()) {
                GaussianRational c = row[piv];
                for (size_t k = piv; k < cols_; ++k) row[k] -= c * v[k];
            }
        }
        rows_.emplace(piv, std::move(v));
        return true;
    }

    std::vector<GVec> basis() const {
        std::vector<GVec> out;
        for (const auto& [p, row] : rows_) out.push_back(row);
        return out;
    }

    const std::map<size_t, GVec>& rows() const { return rows_; }

    // Column indices that are not pivots: coordinates of a complement.
    std::vector<size_t> complement_cols() const {
        std::vector<size_t> out;
        for (size_t c = 0; c < cols_; ++c)
            if (!rows_.count(c)) out.push_back(c);
        return out;
    }

private:
    size_t cols_;
    std::map<size_t, GVec> rows_;
};

} // namespace vxa
