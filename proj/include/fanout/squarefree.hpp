#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "fanout/error.hpp"
#include "fanout/rational.hpp"

namespace fanout {

inline constexpr std::uint64_t kDefaultTrialBound = 1000000;

/// x = t^2 * n with n positive and square-free; t carries the sign of x.
struct SquareFreeDecomposition {
    Rational t;
    BigInt n;

    Rational reconstruct() const { return t * t * Rational(n); }
};

namespace detail {

/// Adds the prime factorization of |v| (v != 0) into `exponents` with the
/// given sign. Fails when a cofactor cannot be certified prime by trial
/// division up to `bound`.
inline void accumulate_factors(BigInt v, int sign, std::uint64_t bound, std::map<BigInt, std::int64_t>& exponents) {
    if (v < 0) v = -v;
    auto take = [&](const BigInt& p) {
        while (v % p == 0) {
            v /= p;
            exponents[p] += sign;
        }
    };
    if (v % 2 == 0) {
        auto shift = boost::multiprecision::lsb(v);
        v >>= shift;
        exponents[BigInt(2)] += sign * static_cast<std::int64_t>(shift);
    }
    for (std::uint64_t d = 3; d <= bound; d += 2) {
        if (v == 1) return;
        BigInt bd(d);
        if (bd * bd > v) break;
        take(bd);
    }
    if (v == 1) return;
    BigInt b(bound);
    // Any remaining cofactor below bound^2 has no factor <= bound, so it is prime.
    if (v <= b * b) {
        exponents[v] += sign;
        return;
    }
    throw Error(ErrorKind::FactorizationTooHard, "cofactor " + v.str() + " exceeds trial-division reach");
}

}  // namespace detail

inline SquareFreeDecomposition squarefree_decompose(const Rational& x, std::uint64_t trial_bound = kDefaultTrialBound) {
    if (x.is_zero()) throw Error(ErrorKind::ZeroInput, "square-free decomposition of 0");
    std::map<BigInt, std::int64_t> exponents;
    detail::accumulate_factors(x.numerator(), +1, trial_bound, exponents);
    detail::accumulate_factors(x.denominator(), -1, trial_bound, exponents);

    BigInt n = 1;
    BigInt t_num = 1;
    BigInt t_den = 1;
    for (const auto& [p, e] : exponents) {
        std::int64_t odd = ((e % 2) + 2) % 2;
        if (odd) n *= p;
        std::int64_t half = (e - odd) / 2;  // floor(e / 2)
        if (half > 0) t_num *= boost::multiprecision::pow(p, static_cast<unsigned>(half));
        if (half < 0) t_den *= boost::multiprecision::pow(p, static_cast<unsigned>(-half));
    }
    Rational t(std::move(t_num), std::move(t_den));
    if (x.sign() < 0) t = -t;
    return {std::move(t), std::move(n)};
}

/// Square-free test by trial division (n > 0).
inline bool is_squarefree(const BigInt& n, std::uint64_t trial_bound = kDefaultTrialBound) {
    if (n <= 0) return false;
    return squarefree_decompose(Rational(n), trial_bound).n == n;
}

}  // namespace fanout
