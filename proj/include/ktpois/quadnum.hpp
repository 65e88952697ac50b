/**
 * @file quadnum.hpp
 * @brief Exact arithmetic in real multi-quadratic extensions of Q.
 *
 * A QuadNum is a finite sum  sum_d  q_d * sqrt(d)  with rational q_d and
 * squarefree positive integer radicands d (d = 1 is the rational part).
 * Killing-normalized root vectors force structure constants of the form
 * (rational) * sqrt(rational); sums of such values close under + and *,
 * so Jacobi and invariance identities stay exactly checkable.
 */
#pragma once

#include <cmath>
#include <map>
#include <stdexcept>

#include "ktpois/rational.hpp"

namespace ktpois {

namespace detail {
/// Splits n = s^2 * d with d squarefree; returns {s, d}. n > 0 required.
inline std::pair<long long, long long> squarefree_split(long long n) {
    long long s = 1, d = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int k = 0; k < e / 2; ++k) s *= p;
        if (e & 1) d *= p;
    }
    d *= n;
    return {s, d};
}
}  // namespace detail

class QuadNum {
public:
    QuadNum() = default;
    QuadNum(const Rational& r) { if (!r.is_zero()) terms_[1] = r; }
    QuadNum(long long n) : QuadNum(Rational(n)) {}

    /// sqrt(p/q) as an exact value; p/q must be >= 0.
    static QuadNum sqrt_of(const Rational& r) {
        if (r.is_zero()) return QuadNum();
        if (r < Rational(0)) throw std::domain_error("sqrt of negative rational");
        // sqrt(p/q) = sqrt(p q) / q
        auto [s, d] = detail::squarefree_split(r.num() * r.den());
        QuadNum out;
        out.terms_[d] = Rational(s, r.den());
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }
    Rational rational_part() const {
        auto it = terms_.find(1);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend QuadNum operator+(const QuadNum& a, const QuadNum& b) {
        QuadNum out = a;
        for (const auto& [d, q] : b.terms_) out.add_term(d, q);
        return out;
    }
    friend QuadNum operator-(const QuadNum& a, const QuadNum& b) { return a + (-b); }
    QuadNum operator-() const {
        QuadNum out;
        for (const auto& [d, q] : terms_) out.terms_[d] = -q;
        return out;
    }
    friend QuadNum operator*(const QuadNum& a, const QuadNum& b) {
        QuadNum out;
        for (const auto& [d1, q1] : a.terms_)
            for (const auto& [d2, q2] : b.terms_) {
                // sqrt(d1) sqrt(d2) = g * sqrt(d1 d2 / g^2), g = gcd(d1, d2)
                long long g = std::gcd(d1, d2);
                out.add_term((d1 / g) * (d2 / g), q1 * q2 * Rational(g));
            }
        return out;
    }
    QuadNum& operator+=(const QuadNum& o) { return *this = *this + o; }
    QuadNum& operator-=(const QuadNum& o) { return *this = *this - o; }
    QuadNum& operator*=(const QuadNum& o) { return *this = *this * o; }

    /// Inverse of a single-term value q*sqrt(d); general inverses unused.
    QuadNum inverse() const {
        if (terms_.size() != 1) throw std::domain_error("QuadNum inverse needs a monomial");
        auto [d, q] = *terms_.begin();
        QuadNum out;
        out.terms_[d] = Rational(1) / (q * Rational(d));
        return out;
    }

    friend bool operator==(const QuadNum& a, const QuadNum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QuadNum& a, const QuadNum& b) { return !(a == b); }

    double to_double() const {
        double v = 0;
        for (const auto& [d, q] : terms_) v += q.to_double() * std::sqrt(static_cast<double>(d));
        return v;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [d, q] : terms_) {
            if (!s.empty()) s += " + ";
            s += q.str();
            if (d != 1) s += "*sqrt(" + std::to_string(d) + ")";
        }
        return s;
    }

private:
    void add_term(long long d, const Rational& q) {
        if (q.is_zero()) return;
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_[d] = q;
        } else {
            it->second += q;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<long long, Rational> terms_;
};

}  // namespace ktpois
