#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "fanout/error.hpp"

namespace fanout {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    BigInt g = gcd(a, b);
    BigInt r = (a / g) * b;
    return r < 0 ? BigInt(-r) : r;
}

/// Non-negative remainder of a modulo m (m > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt old_r = mod_floor(a, m), r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) return 0;
    return mod_floor(old_s, m);
}

inline BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) throw Error(ErrorKind::ParseError, "empty integer '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw Error(ErrorKind::ParseError, "not an integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s);
}

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}            // NOLINT(google-explicit-constructor)
    Rational(long v) : num_(v), den_(1) {}           // NOLINT(google-explicit-constructor)
    Rational(long long v) : num_(v), den_(1) {}      // NOLINT(google-explicit-constructor)
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
        normalize();
    }

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_bigint(text));
        BigInt den = parse_bigint(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
        return Rational(parse_bigint(text.substr(0, slash)), std::move(den));
    }

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (num_ == 0) throw Error(ErrorKind::DivisionByZero, "reciprocal of zero");
        return Rational(den_, num_);
    }

    /// Largest integer not exceeding the value.
    BigInt floor() const {
        BigInt q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    std::string to_string() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ += o.num_;
            return *this;
        }
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    Rational& operator-=(const Rational& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ -= o.num_;
            return *this;
        }
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    Rational& operator*=(const Rational& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ *= o.num_;
            return *this;
        }
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
        BigInt n = num_ * o.den_;
        BigInt d = den_ * o.num_;
        num_ = std::move(n);
        den_ = std::move(d);
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

/// Value modulo m for rationals: the unique r in [0, m) with (x - r)/m integral.
inline Rational mod_rational(const Rational& x, const Rational& m) {
    Rational q = x / m;
    return x - m * Rational(q.floor());
}

}  // namespace fanout
