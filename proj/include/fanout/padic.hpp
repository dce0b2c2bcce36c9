#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "fanout/error.hpp"
#include "fanout/rational.hpp"

namespace fanout {

namespace detail {

inline bool is_prime_by_trial(const BigInt& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (BigInt d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

// Trial division is only trusted up to this size (10^6 divisions).
inline const BigInt& max_checked_prime() {
    static const BigInt bound = BigInt(1000000) * 1000000;
    return bound;
}

}  // namespace detail

/// q = p^exponent. The exponent may be negative: the congruence calculus
/// is defined for every integer power and scaling rules produce such moduli.
class PrimePowerModulus {
public:
    PrimePowerModulus(BigInt p, std::int64_t exponent) : p_(std::move(p)), exponent_(exponent) {
        if (p_ > detail::max_checked_prime())
            throw Error(ErrorKind::InvalidPrime, "prime too large to verify: " + p_.str());
        if (!detail::is_prime_by_trial(p_)) throw Error(ErrorKind::InvalidPrime, p_.str() + " is not prime");
    }

    /// 2^k; the only base used by the geometry and adequacy code.
    static PrimePowerModulus power_of_two(std::int64_t k) { return PrimePowerModulus(BigInt(2), k); }

    /// Parses a positive power of two such as 16.
    static PrimePowerModulus from_power_of_two(const BigInt& q) {
        if (q <= 0 || (q & (q - 1)) != 0) throw Error(ErrorKind::InvalidPrime, q.str() + " is not a power of 2");
        return power_of_two(static_cast<std::int64_t>(boost::multiprecision::msb(q)));
    }

    const BigInt& prime() const noexcept { return p_; }
    std::int64_t exponent() const noexcept { return exponent_; }

    /// The modulus as a rational (exact for negative exponents too).
    Rational value() const {
        BigInt pow = boost::multiprecision::pow(p_, static_cast<unsigned>(exponent_ < 0 ? -exponent_ : exponent_));
        return exponent_ < 0 ? Rational(BigInt(1), pow) : Rational(pow);
    }

    /// The modulus as an integer; requires exponent >= 0.
    BigInt integer_value() const {
        if (exponent_ < 0) throw Error(ErrorKind::Precondition, "modulus p^k with k < 0 is not an integer");
        return boost::multiprecision::pow(p_, static_cast<unsigned>(exponent_));
    }

    /// The modulus multiplied by p^k.
    PrimePowerModulus scaled(std::int64_t k) const { return PrimePowerModulus(p_, exponent_ + k, Unchecked{}); }

private:
    struct Unchecked {};
    PrimePowerModulus(BigInt p, std::int64_t exponent, Unchecked) : p_(std::move(p)), exponent_(exponent) {}

    BigInt p_;
    std::int64_t exponent_;
};

/// Exponent of p in x; +infinity for x = 0.
struct PAdicValuation {
    bool infinite = false;
    std::int64_t value = 0;

    static PAdicValuation infinity() { return {true, 0}; }
    static PAdicValuation finite(std::int64_t v) { return {false, v}; }

    bool at_least(std::int64_t k) const { return infinite || value >= k; }

    friend bool operator==(const PAdicValuation&, const PAdicValuation&) = default;

    std::string to_string() const { return infinite ? std::string("inf") : std::to_string(value); }

    friend std::ostream& operator<<(std::ostream& os, const PAdicValuation& v) { return os << v.to_string(); }
};

namespace detail {

inline std::int64_t strip_factor(BigInt& v, const BigInt& p) {
    std::int64_t count = 0;
    if (p == 2) {
        if (v == 0) return 0;
        auto shift = boost::multiprecision::lsb(v < 0 ? BigInt(-v) : v);
        v >>= shift;
        return static_cast<std::int64_t>(shift);
    }
    while (v != 0 && v % p == 0) {
        v /= p;
        ++count;
    }
    return count;
}

}  // namespace detail

inline PAdicValuation p_adic_valuation(const Rational& x, const BigInt& p) {
    if (p > detail::max_checked_prime() || !detail::is_prime_by_trial(p))
        throw Error(ErrorKind::InvalidPrime, p.str() + " is not a verifiable prime");
    if (x.is_zero()) return PAdicValuation::infinity();
    BigInt num = x.numerator();
    BigInt den = x.denominator();
    std::int64_t up = detail::strip_factor(num, p);
    std::int64_t down = detail::strip_factor(den, p);
    return PAdicValuation::finite(up - down);
}

inline PAdicValuation two_adic_valuation(const Rational& x) {
    if (x.is_zero()) return PAdicValuation::infinity();
    BigInt num = x.numerator();
    BigInt den = x.denominator();
    return PAdicValuation::finite(detail::strip_factor(num, 2) - detail::strip_factor(den, 2));
}

/// |x|_p = p^(-valuation), and 0 for x = 0.
inline Rational p_adic_norm(const Rational& x, const BigInt& p) {
    PAdicValuation v = p_adic_valuation(x, p);
    if (v.infinite) return Rational(0);
    BigInt pow = boost::multiprecision::pow(p, static_cast<unsigned>(v.value < 0 ? -v.value : v.value));
    return v.value < 0 ? Rational(pow) : Rational(BigInt(1), pow);
}

/// True iff |x|_2 = 1, i.e. numerator and denominator are both odd.
inline bool is_odd_unit(const Rational& x) {
    return !x.is_zero() && boost::multiprecision::bit_test(x.numerator(), 0) &&
           boost::multiprecision::bit_test(x.denominator(), 0);
}

/// x ≈_q y: some k coprime to p has k·x ≡ k·y (mod q). Equivalent to the
/// valuation of x - y reaching the exponent of q.
inline bool scong(const Rational& x, const Rational& y, const PrimePowerModulus& q) {
    if (x == y) return true;
    PAdicValuation v = q.prime() == 2 ? two_adic_valuation(x - y) : p_adic_valuation(x - y, q.prime());
    return v.at_least(q.exponent());
}

/// Shorthand for ≈_{2^k}.
inline bool scong2(const Rational& x, const Rational& y, std::int64_t k) {
    if (x == y) return true;
    return two_adic_valuation(x - y).at_least(k);
}

/// The unique m in Z_q^* with x ≈_q m; requires q > 1 and |x|_p = 1.
inline BigInt residue(const Rational& x, const PrimePowerModulus& q) {
    if (q.exponent() < 1) throw Error(ErrorKind::Precondition, "residue requires q > 1");
    PAdicValuation v = q.prime() == 2 ? two_adic_valuation(x) : p_adic_valuation(x, q.prime());
    if (v.infinite || v.value != 0) throw Error(ErrorKind::NotAUnit, x.to_string() + " does not have p-adic norm 1");
    BigInt m = q.integer_value();
    BigInt inv = mod_inverse(x.denominator(), m);
    return mod_floor(x.numerator() * inv, m);
}

/// Residue modulo 2^k of a 2-adic unit.
inline std::int64_t residue2(const Rational& x, std::int64_t k) {
    return residue(x, PrimePowerModulus::power_of_two(k)).convert_to<std::int64_t>();
}

}  // namespace fanout
