#pragma once

// Finite-dimensional unital commutative associative algebras over Q(i),
// given by structure constants, plus radical/local-ring analysis.

#include <sstream>
#include <string>
#include <vector>

#include "vxa/linalg.hpp"

namespace vxa {

struct FiniteAlgebra {
    int dim = 0;
    std::vector<std::string> labels;
    int unit = 0;                            // index of 1_A in the basis
    std::vector<std::vector<GVec>> sc;       // sc[i][j] = e_i * e_j

    GVec zero() const { return gvec_zero(dim); }
    GVec basis_vec(int k) const { return gvec_unit(dim, k); }
    GVec unit_vec() const { return gvec_unit(dim, unit); }

    GVec multiply(const GVec& x, const GVec& y) const {
        if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
            fail("DimMismatch", "element size does not match algebra dimension");
        GVec out(dim);
        for (int i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                gvec_axpy(out, x[i] * y[j], sc[i][j]);
            }
        }
        return out;
    }

    // Matrix of multiplication by x, acting on column coordinates.
    GMat mult_operator(const GVec& x) const {
        GMat m(dim, GVec(dim));
        for (int j = 0; j < dim; ++j) {
            GVec col = multiply(x, basis_vec(j));
            for (int k = 0; k < dim; ++k) m[k][j] = col[k];
        }
        return m;
    }
};

namespace detail {

inline std::string triple_str(const FiniteAlgebra& a, int i, int j, int k) {
    std::ostringstream os;
    os << "(" << a.labels[i] << ", " << a.labels[j] << ", " << a.labels[k] << ")";
    return os.str();
}

} // namespace detail

// Validates and returns the algebra. Errors name the violated basis tuple.
inline FiniteAlgebra new_algebra(int dim, std::vector<std::string> labels, int unit,
                                 std::vector<std::vector<GVec>> sc) {
    if (dim <= 0) fail("DimMismatch", "dimension must be positive");
    if (static_cast<int>(labels.size()) != dim) fail("DimMismatch", "label count != dim");
    if (unit < 0 || unit >= dim) fail("NoUnit", "unit index out of range");
    if (static_cast<int>(sc.size()) != dim) fail("DimMismatch", "structure constant table has wrong shape");
    for (auto& row : sc) {
        if (static_cast<int>(row.size()) != dim) fail("DimMismatch", "structure constant table has wrong shape");
        for (auto& cell : row)
            if (static_cast<int>(cell.size()) != dim) fail("DimMismatch", "structure constant table has wrong shape");
    }
    FiniteAlgebra a{dim, std::move(labels), unit, std::move(sc)};
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (a.sc[i][j] != a.sc[j][i])
                fail("NotCommutative", "e_i*e_j != e_j*e_i at " + detail::triple_str(a, i, j, j));
    for (int j = 0; j < dim; ++j)
        if (a.sc[a.unit][j] != a.basis_vec(j))
            fail("NoUnit", "unit does not act as identity on " + a.labels[j]);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                GVec lhs = a.multiply(a.sc[i][j], a.basis_vec(k));
                GVec rhs = a.multiply(a.basis_vec(i), a.sc[j][k]);
                if (lhs != rhs)
                    fail("NotAssociative", "associativity fails at " + detail::triple_str(a, i, j, k));
            }
    return a;
}

struct LocalProfile {
    std::vector<GVec> radical_basis;
    int nilpotency_index = 1;
    std::vector<int> power_dims; // dims of radical, radical^2, ... down to 0
};

// Radical as the kernel of the trace form tr(L_x L_y); valid in characteristic
// zero. Local means the radical has codimension one.
inline LocalProfile local_profile(const FiniteAlgebra& a) {
    std::vector<GMat> mult(a.dim);
    for (int i = 0; i < a.dim; ++i) mult[i] = a.mult_operator(a.basis_vec(i));
    GMat gram(a.dim, GVec(a.dim));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            GaussianRational tr;
            for (int r = 0; r < a.dim; ++r)
                for (int s = 0; s < a.dim; ++s) tr += mult[i][r][s] * mult[j][s][r];
            gram[i][j] = tr;
        }
    LocalProfile p;
    p.radical_basis = kernel(gram);
    if (static_cast<int>(p.radical_basis.size()) != a.dim - 1)
        fail("NotLocal", "radical has codimension " +
                             std::to_string(a.dim - static_cast<int>(p.radical_basis.size())) +
                             ", expected 1");
    std::vector<GVec> current = p.radical_basis;
    p.power_dims.push_back(static_cast<int>(current.size()));
    while (!current.empty()) {
        RowSpan next(a.dim);
        for (const auto& x : current)
            for (const auto& r : p.radical_basis) next.add(a.multiply(x, r));
        current = next.basis();
        p.power_dims.push_back(static_cast<int>(current.size()));
    }
    p.nilpotency_index = static_cast<int>(p.power_dims.size());
    return p;
}

// Quotient-ring recognition by numeric profile (dim, power dims); the
// translation that makes the generator nilpotent is implicit in the radical.
inline bool profile_matches(const FiniteAlgebra& a, const std::string& tmpl) {
    int want_dim;
    std::vector<int> want_pd;
    if (tmpl == "C[x]/(x^2)") {
        want_dim = 2;
        want_pd = {1, 0};
    } else if (tmpl == "C[x]/(x^3)") {
        want_dim = 3;
        want_pd = {2, 1, 0};
    } else if (tmpl == "C[x,y]/(x^2,xy,y^2)") {
        want_dim = 3;
        want_pd = {2, 0};
    } else {
        fail("UnknownTemplate", "no quotient-ring template named '" + tmpl + "'");
    }
    if (a.dim != want_dim) return false;
    LocalProfile p = local_profile(a);
    return p.power_dims == want_pd;
}

// Decomposition A = C 1_A (+) radical: returns the 1_A-coefficient of x.
// This is the unique algebra character of a local algebra.
inline GaussianRational residue_coefficient(const FiniteAlgebra& a, const LocalProfile& p, const GVec& x) {
    GMat cols; // columns: 1_A then radical basis
    cols.resize(a.dim, GVec(1 + p.radical_basis.size()));
    for (int r = 0; r < a.dim; ++r) {
        cols[r][0] = a.unit_vec()[r];
        for (size_t j = 0; j < p.radical_basis.size(); ++j) cols[r][j + 1] = p.radical_basis[j][r];
    }
    auto sol = solve(cols, x);
    if (!sol) fail("NotLocal", "element is not in C.1 + radical");
    return (*sol)[0];
}

} // namespace vxa
