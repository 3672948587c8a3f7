#pragma once

// Normal-ordered words x1(-m1)...xk(-mk) acting on a ground state (the vacuum
// of the induced module, or a 1-dimensional lowest-weight vector), with exact
// straightening: inserting or commuting a mode rewrites through the loop
// algebra bracket until normal order is restored.
//
// Two layers:
//   - sorted words (exact loop-module elements, any number of a(-1) tails);
//   - the collapse `red` that rewrites trailing a(-1)a'(-1) pairs through the
//     algebra product and drops trailing unit factors. The collapse image is
//     the spanning set the graded pieces are computed in.

#include <map>
#include <utility>

#include "vxa/loop_algebra.hpp"

namespace vxa {

struct WordFactor {
    int16_t m = 1;   // the factor is x(-m), m >= 1
    int8_t kind = 0; // 0 = B generator, 1 = A generator (then m == 1)
    int16_t gen = 0;
    auto operator<=>(const WordFactor&) const = default;
};

using Word = std::vector<WordFactor>;
using WVec = std::map<Word, GaussianRational>;

// Normal order: levels deep-to-shallow, B factors before A factors at the
// same level, generator index ascending.
inline bool factor_precedes(const WordFactor& x, const WordFactor& y) {
    if (x.m != y.m) return x.m > y.m;
    if (x.kind != y.kind) return x.kind < y.kind;
    return x.gen < y.gen;
}

inline int word_degree(const Word& w) {
    int d = 0;
    for (const auto& f : w)
        if (f.kind == 0) d += f.m;
    return d;
}

inline void wvec_add_term(WVec& v, const Word& w, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = v.find(w);
    if (it == v.end()) {
        v.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

inline void wvec_axpy(WVec& y, const GaussianRational& a, const WVec& x) {
    if (a.is_zero()) return;
    for (const auto& [w, c] : x) wvec_add_term(y, w, a * c);
}

inline WVec wvec_scale(const GaussianRational& a, const WVec& x) {
    WVec out;
    wvec_axpy(out, a, x);
    return out;
}

// Ground-state policy. The vacuum is killed by every nonnegative mode and
// carries a(-1) factors as word letters; a module ground state turns a(-1)
// into the character value and the level-0 b-class into its weight.
struct Ground {
    bool vacuum = true;
    GVec phi;    // character of A (module case)
    GVec weight; // per-B-generator weight of level-0 modes (complement columns only)
};

class WordEngine {
public:
    WordEngine(const LoopAlgebra* loop, Ground ground)
        : L_(loop), ground_(std::move(ground)) {}

    const LoopAlgebra& loop() const { return *L_; }
    const Ground& ground() const { return ground_; }

    static LMode factor_mode(const WordFactor& f) {
        return LMode{f.kind, f.gen, -static_cast<int32_t>(f.m)};
    }
    static WordFactor mode_factor(const LMode& m) {
        return WordFactor{static_cast<int16_t>(-m.level), m.kind, m.gen};
    }

    // op . w as an exact loop-module element (sorted words, no collapse).
    const WVec& act(const LMode& op, const Word& w) {
        auto key = std::make_pair(op, w);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        WVec out = op.level < 0 ? insert_creation(op, w) : apply_annihilation(op, w);
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    WVec act(const LMode& op, const WVec& v) {
        WVec out;
        for (const auto& [w, c] : v) wvec_axpy(out, c, act(op, w));
        return out;
    }

    WVec act(const LElem& e, const Word& w) {
        WVec out;
        for (const auto& t : e) wvec_axpy(out, t.coeff, act(t.mode, w));
        return out;
    }

    WVec act(const LElem& e, const WVec& v) {
        WVec out;
        for (const auto& t : e) {
            WVec part = act(t.mode, v);
            wvec_axpy(out, t.coeff, part);
        }
        return out;
    }

    // Translation operator: D(x(-m) w) = m x(-m-1) w + x(-m) D w, D(ground) = 0.
    // The shifted factor keeps its position: earlier factors are re-applied
    // on the left afterwards.
    WVec apply_D(const Word& w) {
        WVec out;
        for (size_t i = 0; i < w.size(); ++i) {
            Word tail(w.begin() + i + 1, w.end());
            const auto& f = w[i];
            WVec term;
            if (f.kind == 0) {
                LMode shifted{0, f.gen, -static_cast<int32_t>(f.m) - 1};
                term = wvec_scale(GaussianRational(f.m), act(shifted, tail));
            } else {
                // a(-2) folds into (del a)(-1)
                LElem folded = L_->a_layer(gvec_unit(L_->bundle().A.dim, f.gen), -2);
                for (const auto& t : folded) wvec_axpy(term, t.coeff, act(t.mode, tail));
            }
            for (size_t j = i; j-- > 0;) term = act(factor_mode(w[j]), term);
            wvec_axpy(out, GaussianRational(1), term);
        }
        return out;
    }

    WVec apply_D(const WVec& v) {
        WVec out;
        for (const auto& [w, c] : v) wvec_axpy(out, c, apply_D(w));
        return out;
    }

    // Collapse of the trailing a(-1) string: pairs rewrite through the algebra
    // product, a trailing unit factor is dropped. Identity on module words.
    WVec red(const Word& w) const {
        if (!ground_.vacuum) return WVec{{w, GaussianRational(1)}};
        size_t tail = w.size();
        while (tail > 0 && w[tail - 1].kind == 1) --tail;
        size_t a_run = w.size() - tail;
        const auto& A = L_->bundle().A;
        if (a_run >= 2) {
            int i = w[w.size() - 2].gen, j = w[w.size() - 1].gen;
            Word base(w.begin(), w.end() - 2);
            const GVec& prod = A.sc[i][j];
            WVec out;
            for (int k = 0; k < A.dim; ++k) {
                if (prod[k].is_zero()) continue;
                Word nw = base;
                nw.push_back(WordFactor{1, 1, static_cast<int16_t>(k)});
                wvec_axpy(out, prod[k], red(nw));
            }
            return out;
        }
        if (a_run == 1 && w.back().gen == A.unit) {
            Word nw(w.begin(), w.end() - 1);
            return red(nw);
        }
        return WVec{{w, GaussianRational(1)}};
    }

    WVec red(const WVec& v) const {
        WVec out;
        for (const auto& [w, c] : v) wvec_axpy(out, c, red(w));
        return out;
    }

private:
    // creation mode: insert into normal order, commuting with brackets.
    WVec insert_creation(const LMode& op, const Word& w) {
        if (w.empty()) {
            if (!ground_.vacuum && op.kind == 1) {
                // a(-1) on the module ground state: character value
                WVec out;
                wvec_add_term(out, Word{}, ground_.phi[op.gen]);
                return out;
            }
            return WVec{{Word{mode_factor(op)}, GaussianRational(1)}};
        }
        WordFactor c = mode_factor(op);
        const WordFactor& h = w.front();
        if (!factor_precedes(h, c)) {
            Word nw;
            nw.reserve(w.size() + 1);
            nw.push_back(c);
            nw.insert(nw.end(), w.begin(), w.end());
            return WVec{{std::move(nw), GaussianRational(1)}};
        }
        Word rest(w.begin() + 1, w.end());
        WVec out = prefix(h, act(op, rest));
        LElem corr = L_->bracket(op, factor_mode(h));
        for (const auto& t : corr) wvec_axpy(out, t.coeff, act(t.mode, rest));
        return out;
    }

    // annihilation / level-0 mode: commute to the right until the ground.
    WVec apply_annihilation(const LMode& op, const Word& w) {
        if (w.empty()) {
            WVec out;
            if (!ground_.vacuum && op.kind == 0 && op.level == 0)
                wvec_add_term(out, Word{}, ground_.weight[op.gen]);
            return out; // vacuum: killed
        }
        const WordFactor& h = w.front();
        Word rest(w.begin() + 1, w.end());
        WVec out = prefix(h, act(op, rest));
        LElem corr = L_->bracket(op, factor_mode(h));
        for (const auto& t : corr) wvec_axpy(out, t.coeff, act(t.mode, rest));
        return out;
    }

    // h . v for a creation factor h known to dominate the recursion's output;
    // insertion handles the equal-level bracket corrections exactly.
    WVec prefix(const WordFactor& h, const WVec& v) {
        WVec out;
        LMode hm = factor_mode(h);
        for (const auto& [w, c] : v) wvec_axpy(out, c, act(hm, w));
        return out;
    }

    const LoopAlgebra* L_;
    Ground ground_;
    std::map<std::pair<LMode, Word>, WVec> memo_;
};

// Incrementally maintained span of homogeneous word vectors; the pivot of a
// row is its largest word. Rows stay in echelon form (not fully reduced).
class WordSpan {
public:
    WVec reduce(WVec v) const {
        WVec out;
        while (!v.empty()) {
            auto top = std::prev(v.end());
            Word w = top->first;
            GaussianRational c = top->second;
            v.erase(top);
            auto it = rows_.find(w);
            if (it == rows_.end()) {
                out.emplace(std::move(w), std::move(c));
            } else {
                // subtract c * (row minus its pivot); pivot coefficient is 1
                for (const auto& [rw, rc] : it->second) {
                    if (rw == w) continue;
                    wvec_add_term(v, rw, -c * rc);
                }
            }
        }
        return out;
    }

    bool contains(const WVec& v) const { return reduce(v).empty(); }

    bool add(WVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        auto top = std::prev(v.end());
        GaussianRational inv = top->second.inv();
        Word pivot = top->first;
        WVec row;
        for (const auto& [w, c] : v) row.emplace(w, c * inv);
        rows_.emplace(std::move(pivot), std::move(row));
        return true;
    }

    size_t dim() const { return rows_.size(); }

    size_t dim_at_degree(int n) const {
        size_t k = 0;
        for (const auto& [w, row] : rows_)
            if (word_degree(w) == n) ++k;
        return k;
    }

    const std::map<Word, WVec>& rows() const { return rows_; }

    std::vector<const WVec*> basis_at_degree(int n) const {
        std::vector<const WVec*> out;
        for (const auto& [w, row] : rows_)
            if (word_degree(w) == n) out.push_back(&row);
        return out;
    }

private:
    std::map<Word, WVec> rows_; // pivot word -> row (pivot coefficient 1)
};

} // namespace vxa
