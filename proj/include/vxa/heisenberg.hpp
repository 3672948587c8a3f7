#pragma once

// Degree-truncated rank-one free boson: partition basis, h(m) action, exact
// products, and the isomorphism check between the radical quotient of a
// solvable-family truncation and this reference model.

#include <algorithm>

#include "vxa/graded_va.hpp"

namespace vxa {

// p(n) by the pentagonal-number recurrence.
inline long partition_count_recurrence(int n) {
    static std::vector<long> table{1};
    for (int m = static_cast<int>(table.size()); m <= n; ++m) {
        long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sign * table[m - g1];
            if (g2 <= m) total += sign * table[m - g2];
        }
        table.push_back(total);
    }
    return table[n];
}

// p(n) by direct enumeration of partitions with parts <= max.
inline long partition_count_enumerate(int n, int max_part = -1) {
    if (n == 0) return 1;
    if (max_part < 0) max_part = n;
    long total = 0;
    for (int p = std::min(n, max_part); p >= 1; --p) total += partition_count_enumerate(n - p, p);
    return total;
}

// The two algorithms must agree; disagreement is a library defect.
inline long partition_count(int n) {
    if (n < 0) fail("BadParameter", "negative partition index");
    long a = partition_count_recurrence(n);
    long b = partition_count_enumerate(n);
    if (a != b) fail("InternalError", "partition count algorithms disagree at n=" + std::to_string(n));
    return a;
}

using Partition = std::vector<int>; // weakly decreasing positive parts
using FVec = std::map<Partition, GaussianRational>;

inline int partition_degree(const Partition& p) {
    int d = 0;
    for (int k : p) d += k;
    return d;
}

class FockTruncation {
public:
    explicit FockTruncation(int max_degree) : N_(max_degree) {
        basis_.assign(N_ + 1, {});
        Partition cur;
        auto rec = [&](auto&& self, int remaining, int max_part) -> void {
            if (remaining == 0) {
                basis_[partition_degree(cur)].push_back(cur);
                return;
            }
            for (int p = std::min(remaining, max_part); p >= 1; --p) {
                cur.push_back(p);
                self(self, remaining - p, p);
                cur.pop_back();
            }
        };
        for (int n = 0; n <= N_; ++n) rec(rec, n, n == 0 ? 1 : n);
    }

    int max_degree() const { return N_; }
    const std::vector<Partition>& basis(int n) const { return basis_[n]; }
    int dim(int n) const { return static_cast<int>(basis_[n].size()); }

    // h(m): creation inserts a part, annihilation removes one with weight
    // m * multiplicity, h(0) acts as zero on the vacuum sector.
    FVec h(long m, const FVec& v) const {
        FVec out;
        for (const auto& [p, c] : v) {
            if (m == 0) continue;
            if (m < 0) {
                Partition np = p;
                np.insert(std::upper_bound(np.begin(), np.end(), static_cast<int>(-m),
                                           std::greater<int>()),
                          static_cast<int>(-m));
                fvec_add(out, np, c);
            } else {
                long mult = static_cast<long>(std::count(p.begin(), p.end(), static_cast<int>(m)));
                if (mult == 0) continue;
                Partition np = p;
                np.erase(std::find(np.begin(), np.end(), static_cast<int>(m)));
                fvec_add(out, np, c * GaussianRational(m * mult));
            }
        }
        return out;
    }

    // u_n v for a basis vector u = h(-k1)...h(-kj)|0> via the iterate formula.
    FVec product(const Partition& u, long n, const FVec& v) const {
        if (v.empty()) return {};
        if (u.empty()) return n == -1 ? v : FVec{};
        long m = u.front();
        Partition rest(u.begin() + 1, u.end());
        int degw = partition_degree(rest);
        int degv = partition_degree(v.begin()->first);
        GaussianRational sign((m - 1) % 2 == 0 ? 1 : -1);
        FVec out;
        for (long k = -1; k >= n - m - degw - degv; --k) {
            FVec sub = product(rest, n - k - m, v);
            if (sub.empty()) continue;
            GaussianRational c = sign * GaussianRational(gen_binomial(k + m - 1, m - 1));
            FVec hk = h(k, sub);
            fvec_axpy(out, c, hk);
        }
        for (long k = 0; k <= degv; ++k) {
            FVec hv = h(k, v);
            if (hv.empty()) continue;
            FVec sub = product(rest, n - k - m, hv);
            GaussianRational c = sign * GaussianRational(gen_binomial(k + m - 1, m - 1));
            fvec_axpy(out, c, sub);
        }
        return out;
    }

    static void fvec_add(FVec& v, const Partition& p, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = v.find(p);
        if (it == v.end())
            v.emplace(p, c);
        else {
            it->second += c;
            if (it->second.is_zero()) v.erase(it);
        }
    }

    static void fvec_axpy(FVec& y, const GaussianRational& a, const FVec& x) {
        for (const auto& [p, c] : x) fvec_add(y, p, a * c);
    }

private:
    int N_;
    std::vector<std::vector<Partition>> basis_;
};

struct HeisenbergReport {
    bool axioms_ok = false;
    GaussianRational residue;                 // class of <b,b> modulo the radical
    std::optional<GaussianRational> rescale;  // r with b-bar = r b, r^2 = 1/residue
    bool sqrt_missing = false;
    std::vector<int> quotient_dims;
    std::vector<long> expected; // p(n)
    std::vector<bool> dims_exact;
    std::vector<bool> bijective;
    int intertwine_checked = 0;
    std::string first_failure;
    bool pass = false;
};

// Certifies V_B/(radical ideal) against the free boson truncation: dimension
// match p(n), linear bijectivity of the monomial map, and intertwining of all
// in-window products on low-degree basis pairs.
inline HeisenbergReport heisenberg_check(const VertexAlgebroid& V, int max_degree = 6,
                                         int length_cap = 8) {
    HeisenbergReport rep;
    LocalProfile prof = local_profile(V.A); // NotLocal propagates
    rep.residue = residue_coefficient(V.A, prof, V.pairing[0][0]);
    if (rep.residue.is_zero())
        fail("NotHeisenbergFamily", "the pairing <b,b> lies in the radical");
    auto root = rep.residue.inv().sqrt_if_square();
    if (root)
        rep.rescale = *root;
    else
        rep.sqrt_missing = true; // dims still compared; intertwining skipped

    GradedVA G(V, max_degree, length_cap);
    rep.axioms_ok = G.axioms_ok();
    auto quo = G.degree0_ideal_quotient(prof.radical_basis);

    bool ok = rep.axioms_ok;
    for (int n = 0; n <= max_degree; ++n) {
        rep.quotient_dims.push_back(quo.dims[n]);
        rep.expected.push_back(partition_count(n));
        bool exact = quo.certs[n] == GradedVA::Cert::Exact;
        rep.dims_exact.push_back(exact);
        if (quo.dims[n] != rep.expected[n] || !exact) {
            ok = false;
            if (rep.first_failure.empty())
                rep.first_failure = "degree " + std::to_string(n) + " dimension " +
                                    std::to_string(quo.dims[n]) +
                                    (exact ? "" : " (uncertified)") + ", expected " +
                                    std::to_string(rep.expected[n]);
        }
    }

    FockTruncation fock(max_degree);
    GaussianRational r = rep.rescale ? *rep.rescale : GaussianRational(1);
    auto f_state = [&](const Partition& p) {
        Word w;
        for (int part : p) w.push_back(WordFactor{static_cast<int16_t>(part), 0, 0});
        GaussianRational coeff(1);
        for (size_t i = 0; i < p.size(); ++i) coeff *= r;
        return WVec{{w, coeff}};
    };
    auto to_quotient = [&](const FVec& fv) {
        WVec out;
        for (const auto& [p, c] : fv) wvec_axpy(out, c, f_state(p));
        return quo.span.reduce(out);
    };

    // per-degree bijectivity of f
    for (int n = 0; n <= max_degree; ++n) {
        WordSpan image;
        for (const auto& p : fock.basis(n)) image.add(quo.span.reduce(f_state(p)));
        bool bij = static_cast<int>(image.dim()) == fock.dim(n) && fock.dim(n) == quo.dims[n];
        rep.bijective.push_back(bij);
        if (!bij) {
            ok = false;
            if (rep.first_failure.empty())
                rep.first_failure = "f is not bijective at degree " + std::to_string(n);
        }
    }

    // intertwining on basis pairs of degree <= 2
    if (!rep.sqrt_missing) {
        for (int du = 0; du <= 2; ++du)
            for (int dv = 0; dv <= 2; ++dv)
                for (const auto& u : fock.basis(du))
                    for (const auto& v : fock.basis(dv))
                        for (long n = du + dv - 1; du + dv - n - 1 <= max_degree; --n) {
                            FVec uv = fock.product(u, n, FVec{{v, GaussianRational(1)}});
                            WVec lhs = to_quotient(uv);
                            WVec rhs = quo.span.reduce(
                                G.product(f_state(u), n, f_state(v)));
                            ++rep.intertwine_checked;
                            if (lhs != rhs) {
                                ok = false;
                                if (rep.first_failure.empty())
                                    rep.first_failure =
                                        "intertwining fails at degrees (" + std::to_string(du) +
                                        ", " + std::to_string(dv) + "), n = " + std::to_string(n);
                            }
                        }
    } else {
        ok = false;
        if (rep.first_failure.empty())
            rep.first_failure = "1/residue has no square root in Q(i); intertwining skipped";
    }

    rep.pass = ok;
    return rep;
}

} // namespace vxa
