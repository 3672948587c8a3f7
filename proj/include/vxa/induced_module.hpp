#pragma once

// Induced graded modules over the truncation: M(U) for a one-dimensional
// ground state U = C v with the class of b acting by lambda and the algebra
// acting through its residue character, the quotient M_B(U) by the relation
// submodule, and the graded-simple quotient L(U) = M(U)/J(U). J(U) is the
// joint kernel of all lowering-word maps into degree 0, computed twice (a
// kernel recursion and a contraction-pairing rank) as mutual cross-checks.

#include "vxa/graded_va.hpp"

namespace vxa {

struct InducedModuleReport {
    GaussianRational lambda;
    bool ground_valid = false;
    std::vector<int> m_dims;
    std::vector<int> mb_dims;
    std::vector<int> j_dims;
    std::vector<int> l_dims;
    std::vector<int> l_dims_rank; // second computation of dim L(U)
    bool methods_agree = false;
};

class InducedModule {
public:
    InducedModule(GradedVA& va, const GaussianRational& lambda)
        : G_(va), N_(va.max_degree()), lambda_(lambda), engine_(nullptr, Ground{}) {
        const auto& V = G_.bundle();
        GVec phi = forced_character(V);
        ground_valid_ = verify_one_dim_module(V, lambda, phi).pass;
        if (!ground_valid_) fail("BadModuleData", "ground state fails the module identities");
        GVec weight(V.b_dim);
        for (auto c : G_.loop().level0_complement()) weight[c] = lambda;
        engine_ = WordEngine(&G_.loop(), Ground{false, phi, weight});
        enumerate_words();
        build_wu_closure();
        build_joint_kernel();
        build_rank_check();
    }

    const std::vector<Word>& words(int n) const { return words_[n]; }
    int m_dim(int n) const { return static_cast<int>(words_[n].size()); }
    int mb_dim(int n) const { return static_cast<int>(words_[n].size() - wu_span_.dim_at_degree(n)); }
    int j_dim(int n) const { return j_dims_[n]; }
    int l_dim(int n) const { return static_cast<int>(words_[n].size()) - j_dims_[n]; }
    int l_dim_rank(int n) const { return rank_dims_[n]; }
    const WordSpan& relation_submodule() const { return wu_span_; }

    InducedModuleReport report() const {
        InducedModuleReport r;
        r.lambda = lambda_;
        r.ground_valid = ground_valid_;
        r.methods_agree = true;
        for (int n = 0; n <= N_; ++n) {
            r.m_dims.push_back(m_dim(n));
            r.mb_dims.push_back(mb_dim(n));
            r.j_dims.push_back(j_dim(n));
            r.l_dims.push_back(l_dim(n));
            r.l_dims_rank.push_back(l_dim_rank(n));
            if (l_dim(n) != l_dim_rank(n)) r.methods_agree = false;
        }
        return r;
    }

private:
    void enumerate_words() {
        words_.assign(N_ + 1, {});
        Word cur;
        auto rec = [&](auto&& self, int remaining, int last_m, int last_gen) -> void {
            if (remaining == 0) {
                words_[word_degree(cur)].push_back(cur);
                return;
            }
            for (int m = std::min(remaining, last_m); m >= 1; --m) {
                int gstart = (m == last_m) ? last_gen : 0;
                for (int g = gstart; g < G_.bundle().b_dim; ++g) {
                    cur.push_back(WordFactor{static_cast<int16_t>(m), 0, static_cast<int16_t>(g)});
                    self(self, remaining - m, m, g);
                    cur.pop_back();
                }
            }
        };
        for (int n = 0; n <= N_; ++n) rec(rec, n, n == 0 ? 1 : n, 0);
        for (int n = 0; n <= N_; ++n) {
            index_[n].clear();
            for (size_t i = 0; i < words_[n].size(); ++i) index_[n][words_[n][i]] = static_cast<int>(i);
        }
    }

    // modes of the relation states applied to the ground vector, then the
    // U(L)-closure: lowering, degree-0, raising monomials.
    void build_wu_closure() {
        std::vector<WVec> seeds;
        WVec ground{{Word{}, GaussianRational(1)}};
        for (const auto& e : G_.relation_seeds()) {
            if (e.empty()) continue;
            int dege = word_degree(e.begin()->first);
            for (int dt = 0; dt <= N_; ++dt) {
                long n = dege - 1 - dt;
                WVec im;
                for (const auto& [w, c] : e)
                    wvec_axpy(im, c, product_on_module(w, n, ground));
                if (!im.empty()) seeds.push_back(std::move(im));
            }
        }
        WordSpan core;
        std::deque<const WVec*> queue;
        auto core_add = [&](const WVec& v) {
            if (v.empty() || word_degree(v.begin()->first) > N_) return;
            WVec reduced = core.reduce(v);
            if (reduced.empty()) return;
            Word pivot = std::prev(reduced.end())->first;
            core.add(reduced);
            queue.push_back(&core.rows().at(pivot));
        };
        for (const auto& s : seeds) core_add(s);
        while (!queue.empty()) {
            const WVec* r = queue.front();
            queue.pop_front();
            int d = word_degree(r->begin()->first);
            for (const auto& op : G_.strict_ops())
                if (d + lmode_degree(op) >= 0) core_add(engine_.act(op, *r));
        }
        std::vector<const WVec*> rows;
        for (const auto& [p, row] : core.rows()) rows.push_back(&row);
        for (const auto* r : rows) queue.push_back(r);
        while (!queue.empty()) {
            const WVec* r = queue.front();
            queue.pop_front();
            for (const auto& op : G_.zero_ops()) core_add(engine_.act(op, *r));
        }
        rows.clear();
        for (const auto& [p, row] : core.rows()) rows.push_back(&row);
        auto expand = [&](auto&& self, const WVec& v, int last_m, int last_gen) -> void {
            wu_span_.add(v);
            int d = word_degree(v.begin()->first);
            for (int m = std::min(N_ - d, last_m); m >= 1; --m) {
                int gstart = (m == last_m) ? last_gen : 0;
                for (int g = gstart; g < G_.bundle().b_dim; ++g) {
                    WVec im = engine_.act(LMode{0, static_cast<int16_t>(g), -m}, v);
                    if (!im.empty()) self(self, im, m, g);
                }
            }
        };
        for (const auto* r : rows) expand(expand, *r, N_, 0);
    }

    // iterate-formula modes of a vacuum-side word acting on module vectors
    WVec product_on_module(const Word& u, long n, const WVec& v) {
        if (v.empty()) return {};
        if (u.empty()) return n == -1 ? v : WVec{};
        WordFactor f = u.front();
        Word rest(u.begin() + 1, u.end());
        long m = f.m;
        int degw = word_degree(rest);
        int degv = word_degree(v.begin()->first);
        GaussianRational sign((m - 1) % 2 == 0 ? 1 : -1);
        WVec out;
        for (long k = -1; k >= n - m - degw - degv; --k) {
            WVec sub = product_on_module(rest, n - k - m, v);
            if (sub.empty()) continue;
            GaussianRational c = sign * GaussianRational(gen_binomial(k + m - 1, m - 1));
            wvec_axpy(out, c, engine_.act(G_.factor_elem(f, k), sub));
        }
        for (long k = 0;; ++k) {
            long drop = f.kind == 0 ? k : k + 1;
            if (drop > degv) break;
            WVec xv = engine_.act(G_.factor_elem(f, k), v);
            if (xv.empty()) continue;
            GaussianRational c = sign * GaussianRational(gen_binomial(k + m - 1, m - 1));
            wvec_axpy(out, c, product_on_module(rest, n - k - m, xv));
        }
        return out;
    }

    GVec coords(const WVec& v, int n) const {
        GVec out(words_[n].size());
        for (const auto& [w, c] : v) out[index_.at(n).at(w)] += c;
        return out;
    }

    // J(U): joint kernel of all strictly-lowering compositions into degree 0.
    void build_joint_kernel() {
        std::vector<RowSpan> K;
        for (int n = 0; n <= N_; ++n) K.emplace_back(words_[n].size());
        j_dims_.assign(N_ + 1, 0);
        // K_0 = 0 (the ground line is read off exactly)
        for (int n = 1; n <= N_; ++n) {
            GMat constraints;
            std::vector<std::vector<GVec>> per_op; // residuals of op images mod K
            for (const auto& op : G_.strict_ops()) {
                int dt = n + lmode_degree(op);
                if (dt < 0) continue;
                std::vector<GVec> res(words_[n].size());
                for (size_t i = 0; i < words_[n].size(); ++i) {
                    WVec im = engine_.act(op, Word(words_[n][i]));
                    res[i] = K[dt].reduce(coords(im, dt));
                }
                per_op.push_back(std::move(res));
            }
            for (const auto& res : per_op) {
                if (res.empty() || res[0].empty()) continue;
                for (size_t k = 0; k < res[0].size(); ++k) {
                    GVec row(words_[n].size());
                    bool nonzero = false;
                    for (size_t i = 0; i < words_[n].size(); ++i) {
                        row[i] = res[i][k];
                        if (!row[i].is_zero()) nonzero = true;
                    }
                    if (nonzero) constraints.push_back(std::move(row));
                }
            }
            for (const auto& kv : kernel(constraints.empty()
                                             ? GMat{GVec(words_[n].size())}
                                             : constraints))
                K[n].add(kv);
            j_dims_[n] = static_cast<int>(K[n].dim());
        }
    }

    // Second computation: rank of the pairing against strictly-lowering
    // functionals that read the ground coefficient.
    void build_rank_check() {
        rank_dims_.assign(N_ + 1, 0);
        std::vector<std::vector<std::vector<GaussianRational>>> kept(N_ + 1);
        // degree 0: the ground-coefficient functional
        kept[0].push_back({GaussianRational(1)});
        rank_dims_[0] = 1;
        for (int d = 1; d <= N_; ++d) {
            RowSpan rank(words_[d].size());
            for (const auto& op : G_.strict_ops()) {
                int dt = d + lmode_degree(op);
                if (dt < 0) continue;
                // image columns
                std::vector<std::vector<std::pair<int, GaussianRational>>> cols(words_[d].size());
                for (size_t i = 0; i < words_[d].size(); ++i) {
                    WVec im = engine_.act(op, Word(words_[d][i]));
                    for (const auto& [w, c] : im) cols[i].emplace_back(index_.at(dt).at(w), c);
                }
                for (const auto& f : kept[dt]) {
                    std::vector<GaussianRational> row(words_[d].size());
                    for (size_t i = 0; i < words_[d].size(); ++i)
                        for (const auto& [widx, c] : cols[i]) row[i] += c * f[widx];
                    if (rank.add(row)) kept[d].push_back(std::move(row));
                }
            }
            rank_dims_[d] = static_cast<int>(rank.dim());
        }
    }

    GradedVA& G_;
    int N_;
    GaussianRational lambda_;
    WordEngine engine_;
    bool ground_valid_ = false;
    std::vector<std::vector<Word>> words_;
    std::map<int, std::map<Word, int>> index_;
    WordSpan wu_span_;
    std::vector<int> j_dims_;
    std::vector<int> rank_dims_;
};

} // namespace vxa
