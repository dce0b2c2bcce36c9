#pragma once

#include <cmath>
#include <map>
#include <string>

#include "fanout/error.hpp"
#include "fanout/rational.hpp"
#include "fanout/squarefree.hpp"

namespace fanout {

/// Finite sum of rational multiples of square roots of square-free integers.
/// The key 1 holds the rational part.
class SurdSum {
public:
    SurdSum() = default;

    void add(const BigInt& radicand, const Rational& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(radicand, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SurdSum& operator+=(const SurdSum& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }

    SurdSum& operator-=(const SurdSum& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }

    /// sqrt(m1) sqrt(m2) = g sqrt((m1/g)(m2/g)) with g = gcd(m1, m2); the
    /// product of coprime square-free numbers is again square-free.
    friend SurdSum operator*(const SurdSum& x, const SurdSum& y) {
        SurdSum out;
        for (const auto& [m1, c1] : x.terms_) {
            for (const auto& [m2, c2] : y.terms_) {
                BigInt g = gcd(m1, m2);
                out.add((m1 / g) * (m2 / g), c1 * c2 * Rational(g));
            }
        }
        return out;
    }

    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

    Rational rational_part() const {
        auto it = terms_.find(BigInt(1));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const std::map<BigInt, Rational>& terms() const noexcept { return terms_; }

private:
    std::map<BigInt, Rational> terms_;
};

/// r + t sqrt(n) with n square-free; a rational value has t = 0 and n = 1.
class QuadraticReal {
public:
    QuadraticReal() = default;
    QuadraticReal(Rational r) : r_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    QuadraticReal(int r) : r_(r) {}                  // NOLINT(google-explicit-constructor)

    QuadraticReal(Rational r, Rational t, const BigInt& n) : r_(std::move(r)), t_(std::move(t)), n_(n) {
        if (n_ < 0) throw Error(ErrorKind::InvalidConfig, "negative radicand " + n_.str());
        if (n_ == 0 || t_.is_zero()) {
            t_ = 0;
            n_ = 1;
            return;
        }
        SquareFreeDecomposition sf = squarefree_decompose(Rational(n_));
        t_ *= sf.t;
        n_ = sf.n;
        if (n_ == 1) {
            r_ += t_;
            t_ = 0;
        }
    }

    const Rational& rational_part() const noexcept { return r_; }
    const Rational& coeff() const noexcept { return t_; }
    const BigInt& radicand() const noexcept { return n_; }
    bool is_rational() const noexcept { return t_.is_zero(); }

    SurdSum to_surd() const {
        SurdSum s;
        s.add(BigInt(1), r_);
        s.add(n_, t_);
        return s;
    }

    double to_double() const { return r_.to_double() + t_.to_double() * std::sqrt(n_.convert_to<double>()); }

    QuadraticReal operator-() const {
        QuadraticReal q = *this;
        q.r_ = -q.r_;
        q.t_ = -q.t_;
        return q;
    }

    /// Shift by a rational.
    friend QuadraticReal operator+(QuadraticReal q, const Rational& x) {
        q.r_ += x;
        return q;
    }

    /// Scale by a rational.
    friend QuadraticReal operator*(QuadraticReal q, const Rational& x) {
        q.r_ *= x;
        q.t_ *= x;
        if (q.t_.is_zero()) q.n_ = 1;
        return q;
    }

    std::string to_string() const {
        if (is_rational()) return r_.to_string();
        std::string s = r_.is_zero() ? std::string() : r_.to_string() + " + ";
        return s + t_.to_string() + "*sqrt(" + n_.str() + ")";
    }

    friend bool operator==(const QuadraticReal&, const QuadraticReal&) = default;

private:
    Rational r_;
    Rational t_;
    BigInt n_ = 1;
};

}  // namespace fanout
