#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "vxa/errors.hpp"

namespace vxa {

using Rational = mpq_class;

inline Rational rational_of(long num, long den = 1) {
    if (den == 0) fail("DivisionByZero", "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Returns the exact square root of a nonnegative rational when it exists in Q.
inline std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

// Exact scalar in Q(i), the base field of every computation in this library.
// Values are immutable in spirit: all operations return fresh values.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(const Rational& re) : re_(re), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational of(long num, long den) { return {rational_of(num, den), Rational(0)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inv() const {
        if (is_zero()) fail("DivisionByZero", "inverse of zero in Q(i)");
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inv(); }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    // Principal square root in Q(i) when one exists: the representative with
    // re > 0, or re = 0 and im > 0. Absence is a value, never an error.
    std::optional<GaussianRational> sqrt_if_square() const {
        if (is_zero()) return GaussianRational();
        std::optional<GaussianRational> root;
        if (im_ == 0) {
            if (re_ > 0) {
                auto r = rational_sqrt(re_);
                if (r) root = GaussianRational(*r, Rational(0));
            } else {
                auto r = rational_sqrt(-re_);
                if (r) root = GaussianRational(Rational(0), *r);
            }
        } else {
            auto n = rational_sqrt(norm());
            if (n) {
                auto u = rational_sqrt((re_ + *n) / 2);
                if (u) {
                    Rational v = im_ / (2 * (*u));
                    root = GaussianRational(*u, v);
                }
            }
        }
        if (!root) return std::nullopt;
        if (root->re_ < 0 || (root->re_ == 0 && root->im_ < 0)) root = -(*root);
        return root;
    }

    // Canonical text form: "1/2-3i", "i" printed as "1i", zero as "0".
    std::string str() const {
        if (im_ == 0) return re_.get_str();
        if (re_ == 0) return im_.get_str() + "i";
        std::string s = re_.get_str();
        if (im_ > 0) s += "+";
        return s + im_.get_str() + "i";
    }

    static GaussianRational parse(const std::string& text);

private:
    Rational re_, im_;
};

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

namespace detail {

inline Rational parse_rational(std::string t) {
    if (t.empty() || t == "+" ) t = "1";
    else if (t == "-") t = "-1";
    if (t.front() == '+') t = t.substr(1);
    for (char c : t)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            fail("BadScalar", "bad rational literal '" + t + "'");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
        fail("BadScalar", "bad rational literal '" + t + "'");
    if (q.get_den() == 0) fail("BadScalar", "zero denominator in '" + t + "'");
    q.canonicalize();
    return q;
}

} // namespace detail

// Accepts "a/b+c/di" and the obvious degenerate forms ("3", "-i", "1/2-3i").
// Whitespace is rejected; input need not be in lowest terms.
inline GaussianRational GaussianRational::parse(const std::string& text) {
    if (text.empty()) fail("BadScalar", "empty scalar");
    for (char c : text)
        if (std::isspace(static_cast<unsigned char>(c))) fail("BadScalar", "whitespace in scalar '" + text + "'");
    if (text.back() != 'i') return {detail::parse_rational(text), Rational(0)};
    std::string body = text.substr(0, text.size() - 1);
    // Split at the last top-level sign; a sign at position 0 belongs to the term.
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return {Rational(0), detail::parse_rational(body)};
    return {detail::parse_rational(body.substr(0, split)), detail::parse_rational(body.substr(split))};
}

// Deterministic generator for small Q(i) samples; used by classifier search
// and by the randomized test suites (seeded, reproducible).
class ScalarSampler {
public:
    explicit ScalarSampler(uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long next_int(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rational next_rational() { return rational_of(next_int(-4, 4), next_int(1, 3)); }

    GaussianRational next_scalar() { return {next_rational(), next_rational()}; }

    GaussianRational next_nonzero() {
        for (;;) {
            auto g = next_scalar();
            if (!g.is_zero()) return g;
        }
    }

private:
    uint64_t state_;
};

} // namespace vxa
