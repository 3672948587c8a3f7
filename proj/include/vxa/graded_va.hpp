#pragma once

// Degree-truncated model of the N-graded vertex algebra attached to a vertex
// algebroid: spanning words per degree, the relation subspace generated by
// the unit/product/action relations and their translates under the mode
// action, quotient dimensions with machine-checkable certificates, products
// via the iterate formula, and ideal quotients.

#include <deque>
#include <optional>
#include <string>

#include "vxa/word_engine.hpp"

namespace vxa {

inline Rational gen_binomial(long top, long k) {
    Rational num(1), den(1);
    for (long i = 0; i < k; ++i) {
        num *= Rational(top - i);
        den *= Rational(i + 1);
    }
    return num / den;
}

class GradedVA {
public:
    enum class Cert { Exact, UpperBound };

    struct DegreeReport {
        int degree = 0;
        int dim = 0;
        int lower = 0;
        Cert cert = Cert::UpperBound;
    };

    GradedVA(VertexAlgebroid bundle, int max_degree = 6, int length_cap = 8,
             bool with_certificates = true)
        : loop_(std::move(bundle), max_degree + 1),
          engine_(&loop_, Ground{true, {}, {}}),
          N_(max_degree),
          cap_(length_cap) {
        if (N_ < 1) fail("DegreeOverflow", "truncation degree must be at least 1");
        axioms_ok_ = check_axioms(loop_.bundle()).ok;
        enumerate_words();
        build_ops();
        cap_hit_ = false;
        relations_ = close_span(WordSpan{}, relation_seeds(), &cap_hit_);
        dims_.resize(N_ + 1);
        for (int n = 0; n <= N_; ++n)
            dims_[n] = static_cast<int>(words_[n].size() - relations_.dim_at_degree(n));
        stable_under_cap_growth_ = !cap_hit_;
        if (cap_hit_ && with_certificates) {
            // rebuild at cap+1 and cap+2 and compare the dimension profile
            stable_under_cap_growth_ = true;
            for (int extra = 1; extra <= 2 && stable_under_cap_growth_; ++extra) {
                GradedVA bigger(loop_.bundle(), N_, cap_ + extra, false);
                for (int n = 0; n <= N_; ++n)
                    if (bigger.dim(n) != dims_[n]) stable_under_cap_growth_ = false;
            }
        }
        if (with_certificates) certify();
    }

    const LoopAlgebra& loop() const { return loop_; }
    const VertexAlgebroid& bundle() const { return loop_.bundle(); }
    WordEngine& engine() { return engine_; }
    int max_degree() const { return N_; }
    int length_cap() const { return cap_; }
    bool cap_hit() const { return cap_hit_; }
    bool axioms_ok() const { return axioms_ok_; }

    const std::vector<Word>& words(int n) const { return words_[n]; }
    int dim(int n) const { return dims_[n]; }
    const WordSpan& relations() const { return relations_; }

    Cert certificate(int n) const { return certs_.empty() ? Cert::UpperBound : certs_[n]; }
    int lower_bound(int n) const { return lowers_.empty() ? 0 : lowers_[n]; }

    std::vector<DegreeReport> character() const {
        std::vector<DegreeReport> out;
        for (int n = 0; n <= N_; ++n)
            out.push_back({n, dim(n), lower_bound(n), certificate(n)});
        return out;
    }

    // ------------------------------------------------------------------
    // states and vertex operations

    WVec state(const GVec& a_part, const GVec& b_part) {
        WVec out;
        const auto& A = bundle().A;
        for (int j = 0; j < A.dim; ++j)
            if (!a_part[j].is_zero())
                wvec_axpy(out, a_part[j], engine_.red(Word{WordFactor{1, 1, static_cast<int16_t>(j)}}));
        for (int g = 0; g < bundle().b_dim; ++g)
            if (!b_part[g].is_zero())
                wvec_add_term(out, Word{WordFactor{1, 0, static_cast<int16_t>(g)}}, b_part[g]);
        return out;
    }

    WVec vacuum() const { return WVec{{Word{}, GaussianRational(1)}}; }

    WVec reduce(const WVec& v) const { return relations_.reduce(v); }

    WVec translation(const WVec& v) { return engine_.red(engine_.apply_D(v)); }

    // u_n v for a spanning word u (recursive iterate formula; generator modes
    // act through the loop algebra). The raw result is neither collapsed nor
    // reduced; product() below applies the collapse.
    WVec product_raw(const Word& u, long n, const WVec& v) {
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
            WVec sub = product_raw(rest, n - k - m, v);
            if (sub.empty()) continue;
            GaussianRational c = sign * GaussianRational(gen_binomial(k + m - 1, m - 1));
            wvec_axpy(out, c, engine_.act(factor_elem(f, k), sub));
        }
        for (long k = 0;; ++k) {
            long drop = f.kind == 0 ? k : k + 1;
            if (drop > degv) break;
            WVec xv = engine_.act(factor_elem(f, k), v);
            if (xv.empty()) continue;
            WVec sub = product_raw(rest, n - k - m, xv);
            GaussianRational c = sign * GaussianRational(gen_binomial(k + m - 1, m - 1));
            wvec_axpy(out, c, sub);
        }
        return out;
    }

    WVec product(const WVec& u, long n, const WVec& v) {
        WVec out;
        for (const auto& [w, c] : u) wvec_axpy(out, c, product_raw(w, n, v));
        return engine_.red(out);
    }

    // ------------------------------------------------------------------
    // identity checks on the truncation

    // u_n v = sum_j (-1)^(n+j+1) D^j (v_(n+j) u) / j!, compared in the quotient.
    bool check_skew_symmetry(const WVec& u, const WVec& v, long n) {
        WVec lhs = reduce(product(u, n, v));
        int degu = u.empty() ? 0 : word_degree(u.begin()->first);
        int degv = v.empty() ? 0 : word_degree(v.begin()->first);
        WVec rhs;
        Rational factorial(1);
        for (long j = 0; n + j <= degu + degv - 1 || j == 0; ++j) {
            if (j > 0) factorial *= Rational(j);
            WVec term = product(v, n + j, u);
            for (long t = 0; t < j; ++t) term = translation(term);
            GaussianRational c(((n + j + 1) % 2 == 0) ? 1 : -1);
            wvec_axpy(rhs, c * GaussianRational(Rational(1) / factorial), term);
        }
        return lhs == reduce(engine_.red(rhs));
    }

    // [x(m), y(n)] w = (x0y)(m+n) w + m (x1y)(m+n-1) w for generators x, y.
    // Returns nullopt when an intermediate degree leaves the window.
    std::optional<bool> check_commutator(const detail::CElem& x, const detail::CElem& y, long m,
                                         long n, const Word& w) {
        int degw = word_degree(w);
        int dx = celem_degree_shift(x, m), dy = celem_degree_shift(y, n);
        if (degw + dy < 0 || degw + dy > N_ || degw + dx < 0 || degw + dx > N_ ||
            degw + dx + dy < 0 || degw + dx + dy > N_)
            return std::nullopt;
        WVec wv{{w, GaussianRational(1)}};
        LElem xm = celem_modes(x, m), yn = celem_modes(y, n);
        WVec lhs = engine_.act(xm, engine_.act(yn, wv));
        WVec tmp = engine_.act(yn, engine_.act(xm, wv));
        wvec_axpy(lhs, GaussianRational(-1), tmp);

        const auto& V = bundle();
        detail::CElem x0y = detail::prod0(V, x, y);
        detail::CElem x1y = detail::prod1(V, x, y);
        WVec rhs = engine_.act(celem_modes(x0y, m + n), wv);
        if (m != 0) {
            WVec pair_term = engine_.act(celem_modes(x1y, m + n - 1), wv);
            wvec_axpy(rhs, GaussianRational(m), pair_term);
        }
        return reduce(engine_.red(lhs)) == reduce(engine_.red(rhs));
    }

    // ------------------------------------------------------------------
    // ideals and quotients

    struct IdealQuotient {
        WordSpan span;   // relations + the ideal generated by the seeds
        bool cap_hit = false;
        std::vector<int> dims;        // quotient dims per degree
        std::vector<int> ideal_dims;  // dims of the ideal inside the truncation
        std::vector<int> lowers;
        std::vector<Cert> certs;
    };

    // Ideal generated by S(-1)|0> for S a set of degree-0 elements, closed
    // under translation and all in-window modes; returns the quotient data.
    IdealQuotient degree0_ideal_quotient(const std::vector<GVec>& S, bool with_certs = true) {
        IdealQuotient out;
        std::vector<WVec> seeds;
        const auto& A = bundle().A;
        for (const auto& s : S) {
            WVec v;
            for (int j = 0; j < A.dim; ++j)
                if (!s[j].is_zero())
                    wvec_add_term(v, Word{WordFactor{1, 1, static_cast<int16_t>(j)}}, s[j]);
            if (!v.empty()) seeds.push_back(std::move(v));
        }
        out.cap_hit = false;
        out.span = close_span(relations_, seeds, &out.cap_hit);
        out.dims.resize(N_ + 1);
        out.ideal_dims.resize(N_ + 1);
        for (int n = 0; n <= N_; ++n) {
            out.dims[n] = static_cast<int>(words_[n].size() - out.span.dim_at_degree(n));
            out.ideal_dims[n] =
                static_cast<int>(out.span.dim_at_degree(n) - relations_.dim_at_degree(n));
        }
        if (with_certs) {
            out.lowers = rank_lower_bounds(out.span, out.dims);
            out.certs.resize(N_ + 1, Cert::UpperBound);
            // Exact demands an unbound cap: only then is the enumerated word
            // set complete and the closure untruncated, so that the rank
            // bound squeezes the true dimension.
            bool sound = axioms_ok_ && !cap_hit_ && !out.cap_hit && stable_under_cap_growth_;
            for (int n = 0; n <= N_; ++n)
                if (sound && out.lowers[n] == out.dims[n]) out.certs[n] = Cert::Exact;
        }
        return out;
    }

    // Every in-window mode/translation image of every row must stay in the
    // span (the submodule fixpoint property).
    bool verify_mode_stable(const WordSpan& span, std::string* witness = nullptr) {
        for (const auto& [pivot, row] : span.rows()) {
            int d = word_degree(pivot);
            auto check_im = [&](const WVec& im, const std::string& tag) {
                if (im.empty()) return true;
                if (exceeds_cap(im)) return true; // outside the windowed statement
                if (!span.contains(im)) {
                    if (witness) *witness = tag + " escapes the span (pivot degree " +
                                            std::to_string(d) + ")";
                    return false;
                }
                return true;
            };
            for (const auto& op : strict_ops_)
                if (d + lmode_degree(op) >= 0)
                    if (!check_im(engine_.red(engine_.act(op, row)), "lowering mode")) return false;
            for (const auto& op : zero_ops_)
                if (!check_im(engine_.red(engine_.act(op, row)), "degree-0 mode")) return false;
            for (const auto& op : creation_ops_)
                if (d + lmode_degree(op) <= N_)
                    if (!check_im(engine_.red(engine_.act(op, row)), "raising mode")) return false;
            if (d + 1 <= N_)
                if (!check_im(translation(row), "translation")) return false;
        }
        return true;
    }

    const std::vector<LMode>& strict_ops() const { return strict_ops_; }
    const std::vector<LMode>& zero_ops() const { return zero_ops_; }

    LElem factor_elem(const WordFactor& f, long level) const {
        if (f.kind == 0) return loop_.b_layer(gvec_unit(bundle().b_dim, f.gen), static_cast<int>(level));
        return loop_.a_layer(gvec_unit(bundle().A.dim, f.gen), static_cast<int>(level));
    }

    LElem celem_modes(const detail::CElem& x, long level) const {
        LElem out = loop_.a_layer(x.a, static_cast<int>(level));
        return LoopAlgebra::merge(std::move(out), loop_.b_layer(x.b, static_cast<int>(level)));
    }

    // The generating relation states (unit, algebra product, module action),
    // as exact loop-module vectors; also the seeds for module construction.
    std::vector<WVec> relation_seeds() {
        std::vector<WVec> seeds;
        const auto& A = bundle().A;
        // unit relation: 1_A(-1)|0> - |0>
        {
            WVec v;
            wvec_add_term(v, Word{WordFactor{1, 1, static_cast<int16_t>(A.unit)}}, GaussianRational(1));
            wvec_add_term(v, Word{}, GaussianRational(-1));
            seeds.push_back(std::move(v));
        }
        // product relations: a(-1)a'(-1)|0> - (a*a')(-1)|0>
        for (int i = 0; i < A.dim; ++i)
            for (int j = i; j < A.dim; ++j) {
                WVec v;
                Word w{WordFactor{1, 1, static_cast<int16_t>(std::min(i, j))},
                       WordFactor{1, 1, static_cast<int16_t>(std::max(i, j))}};
                wvec_add_term(v, w, GaussianRational(1));
                for (int k = 0; k < A.dim; ++k)
                    wvec_add_term(v, Word{WordFactor{1, 1, static_cast<int16_t>(k)}}, -A.sc[i][j][k]);
                seeds.push_back(std::move(v));
            }
        // action relations: a(-1)b(-1)|0> - (a.b)(-1)|0>
        for (int i = 0; i < A.dim; ++i)
            for (int g = 0; g < bundle().b_dim; ++g) {
                LMode am{1, static_cast<int16_t>(i), -1};
                WVec v = engine_.act(am, Word{WordFactor{1, 0, static_cast<int16_t>(g)}});
                const GVec& ab = bundle().action[i][g];
                for (int h = 0; h < bundle().b_dim; ++h)
                    wvec_add_term(v, Word{WordFactor{1, 0, static_cast<int16_t>(h)}}, -ab[h]);
                seeds.push_back(std::move(v));
            }
        return seeds;
    }

private:
    static int celem_degree_shift(const detail::CElem& x, long level) {
        // A-parts at level l have degree -l-1, B-parts -l; mixed inputs only
        // occur with one part present.
        if (!gvec_is_zero(x.b)) return static_cast<int>(-level);
        return static_cast<int>(-level) - 1;
    }

    void enumerate_words() {
        words_.assign(N_ + 1, {});
        const auto& A = bundle().A;
        Word cur;
        // B-partitions with labels, parts non-increasing in the factor order,
        // each optionally extended by a single non-unit a(-1) tail.
        auto rec = [&](auto&& self, int remaining, int last_m, int last_gen) -> void {
            if (remaining == 0) {
                int n = word_degree(cur);
                words_[n].push_back(cur);
                if (static_cast<int>(cur.size()) < cap_) {
                    for (int j = 0; j < A.dim; ++j) {
                        if (j == A.unit) continue;
                        Word w = cur;
                        w.push_back(WordFactor{1, 1, static_cast<int16_t>(j)});
                        words_[n].push_back(std::move(w));
                    }
                }
                return;
            }
            if (static_cast<int>(cur.size()) >= cap_) return;
            for (int m = std::min(remaining, last_m); m >= 1; --m) {
                int gstart = (m == last_m) ? last_gen : 0;
                for (int g = gstart; g < bundle().b_dim; ++g) {
                    cur.push_back(WordFactor{static_cast<int16_t>(m), 0, static_cast<int16_t>(g)});
                    self(self, remaining - m, m, g);
                    cur.pop_back();
                }
            }
        };
        for (int n = 0; n <= N_; ++n) rec(rec, n, n == 0 ? 1 : n, 0);
        for (int n = 0; n <= N_; ++n) {
            word_index_[n].clear();
            for (size_t i = 0; i < words_[n].size(); ++i) word_index_[n][words_[n][i]] = static_cast<int>(i);
        }
    }

    void build_ops() {
        strict_ops_.clear();
        zero_ops_.clear();
        creation_ops_.clear();
        for (int m = 1; m <= N_; ++m)
            for (int g = 0; g < bundle().b_dim; ++g) {
                strict_ops_.push_back(LMode{0, static_cast<int16_t>(g), m});
                creation_ops_.push_back(LMode{0, static_cast<int16_t>(g), -m});
            }
        for (int j = 0; j < bundle().A.dim; ++j) {
            if (j == bundle().A.unit) continue;
            zero_ops_.push_back(LMode{1, static_cast<int16_t>(j), -1});
        }
        for (auto c : loop_.level0_complement())
            zero_ops_.push_back(LMode{0, static_cast<int16_t>(c), 0});
    }

    bool exceeds_cap(const WVec& v) const {
        for (const auto& [w, c] : v)
            if (static_cast<int>(w.size()) > cap_) return true;
        return false;
    }

    // U(L)C[D]-closure of the seeds on top of an initial span: translates of
    // the seeds, then lowering ops, then degree-0 ops, then raising monomials.
    WordSpan close_span(WordSpan span, const std::vector<WVec>& seeds, bool* cap_hit) {
        std::vector<const WVec*> core_rows;
        WordSpan core;
        auto admit = [&](const WVec& v) -> bool {
            if (v.empty()) return false;
            if (exceeds_cap(v)) {
                *cap_hit = true;
                return false;
            }
            return word_degree(v.begin()->first) <= N_;
        };
        std::deque<const WVec*> queue;
        auto core_add = [&](const WVec& v) {
            if (!admit(v)) return;
            WVec reduced = core.reduce(v);
            if (reduced.empty()) return;
            core.add(reduced);
            // the row just inserted is the one with the largest word of `reduced`
            const auto& row = core.rows().at(std::prev(reduced.end())->first);
            core_rows.push_back(&row);
            queue.push_back(&row);
        };
        // translated seeds
        for (const auto& s : seeds) {
            WVec cur = s;
            while (!cur.empty() && word_degree(cur.begin()->first) <= N_) {
                core_add(engine_.red(cur));
                cur = engine_.apply_D(cur);
            }
        }
        // lowering closure
        while (!queue.empty()) {
            const WVec* r = queue.front();
            queue.pop_front();
            int d = word_degree(r->begin()->first);
            for (const auto& op : strict_ops_) {
                if (d + lmode_degree(op) < 0) continue;
                core_add(engine_.red(engine_.act(op, *r)));
            }
        }
        // degree-0 closure
        for (size_t i = 0; i < core_rows.size(); ++i) queue.push_back(core_rows[i]);
        while (!queue.empty()) {
            const WVec* r = queue.front();
            queue.pop_front();
            for (const auto& op : zero_ops_) core_add(engine_.red(engine_.act(op, *r)));
        }
        // raising monomials, largest part applied first
        auto expand = [&](auto&& self, const WVec& v, int last_m, int last_gen) -> void {
            span.add(v);
            int d = word_degree(v.begin()->first);
            for (int m = std::min(N_ - d, last_m); m >= 1; --m) {
                int gstart = (m == last_m) ? last_gen : 0;
                for (int g = gstart; g < bundle().b_dim; ++g) {
                    LMode op{0, static_cast<int16_t>(g), -m};
                    WVec im = engine_.red(engine_.act(op, v));
                    if (!admit(im)) continue;
                    self(self, im, m, g);
                }
            }
        };
        for (const WVec* r : core_rows) expand(expand, *r, N_, 0);
        return span;
    }

    // Functional-rank lower bounds for the quotient dims of a span: rank of
    // the pairing of degree-n classes against in-window lowering functionals
    // that read degree-0 coordinates. Sound because the span is mode-stable
    // and the degree-0 read is taken modulo the span.
    std::vector<int> rank_lower_bounds(const WordSpan& span, const std::vector<int>& target) {
        std::vector<int> lower(N_ + 1, 0);
        // dense functional rows per degree, kept only when they add rank
        std::vector<std::vector<std::vector<GaussianRational>>> kept(N_ + 1);
        std::vector<RowSpan> ranks;
        for (int n = 0; n <= N_; ++n) ranks.emplace_back(words_[n].size());

        // cached op images in coordinates: cols[i] lists the (index, coeff)
        // terms of op applied to the i-th degree-d word
        using Cols = std::vector<std::vector<std::pair<int, GaussianRational>>>;
        std::map<std::pair<LMode, int>, Cols> img_cache;
        auto image_row = [&](const LMode& op, int d) -> const Cols& {
            auto key = std::make_pair(op, d);
            auto it = img_cache.find(key);
            if (it != img_cache.end()) return it->second;
            int dt = d + lmode_degree(op);
            Cols cols(words_[d].size());
            for (size_t i = 0; i < words_[d].size(); ++i) {
                WVec im = engine_.red(engine_.act(op, Word(words_[d][i])));
                for (const auto& [w, c] : im) {
                    auto jt = word_index_[dt].find(w);
                    if (jt == word_index_[dt].end()) continue; // beyond the cap
                    cols[i].emplace_back(jt->second, c);
                }
            }
            return img_cache.emplace(std::move(key), std::move(cols)).first->second;
        };

        // degree-0 reads: coordinates modulo the span
        for (size_t i = 0; i < words_[0].size(); ++i) {
            // functional: coefficient of the i-th degree-0 word after reduction
            std::vector<GaussianRational> row(words_[0].size());
            for (size_t u = 0; u < words_[0].size(); ++u) {
                WVec red = span.reduce(WVec{{words_[0][u], GaussianRational(1)}});
                auto it = red.find(words_[0][i]);
                if (it != red.end()) row[u] = it->second;
            }
            if (ranks[0].add(row)) kept[0].push_back(std::move(row));
        }
        lower[0] = static_cast<int>(ranks[0].dim());

        for (int d = 1; d <= N_; ++d) {
            size_t budget = 32 + 8 * static_cast<size_t>(target[d] + 1);
            size_t tried = 0;
            auto compose_with = [&](const auto& cols, const std::vector<GaussianRational>& f) {
                ++tried;
                std::vector<GaussianRational> row(words_[d].size());
                for (size_t u = 0; u < words_[d].size(); ++u)
                    for (const auto& [widx, c] : cols[u]) row[u] += c * f[widx];
                if (ranks[d].add(row)) kept[d].push_back(std::move(row));
            };
            for (const auto& op : strict_ops_) {
                int dt = d + lmode_degree(op);
                if (dt < 0) continue;
                if (static_cast<int>(ranks[d].dim()) >= target[d] || tried > budget) break;
                auto cols = image_row(op, d);
                for (const auto& f : kept[dt]) {
                    if (static_cast<int>(ranks[d].dim()) >= target[d] || tried > budget) break;
                    compose_with(cols, f);
                }
            }
            // degree-0 compositions on top
            size_t processed = 0;
            while (processed < kept[d].size() && static_cast<int>(ranks[d].dim()) < target[d] &&
                   tried <= budget) {
                auto f = kept[d][processed++];
                for (const auto& op : zero_ops_) {
                    if (static_cast<int>(ranks[d].dim()) >= target[d] || tried > budget) break;
                    compose_with(image_row(op, d), f);
                }
            }
            lower[d] = static_cast<int>(ranks[d].dim());
        }
        return lower;
    }

    void certify() {
        lowers_ = rank_lower_bounds(relations_, dims_);
        certs_.assign(N_ + 1, Cert::UpperBound);
        // See degree0_ideal_quotient: a bound cap invalidates exactness even
        // when the dimension profile happens to stabilize.
        for (int n = 0; n <= N_; ++n)
            if (axioms_ok_ && !cap_hit_ && stable_under_cap_growth_ && lowers_[n] == dims_[n])
                certs_[n] = Cert::Exact;
    }

    LoopAlgebra loop_;
    WordEngine engine_;
    int N_;
    int cap_;
    bool axioms_ok_ = false;
    bool cap_hit_ = false;
    bool stable_under_cap_growth_ = false;
    std::vector<std::vector<Word>> words_;
    std::map<int, std::map<Word, int>> word_index_;
    std::vector<LMode> strict_ops_, zero_ops_, creation_ops_;
    WordSpan relations_;
    std::vector<int> dims_;
    std::vector<int> lowers_;
    std::vector<Cert> certs_;
};

} // namespace vxa
