#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "fanout/adequacy.hpp"
#include "fanout/coupling.hpp"
#include "fanout/error.hpp"
#include "fanout/rational.hpp"

namespace fanout {

/// Cap on n for loops over all 2^n basis states. FANOUT_MAX_N overrides it.
inline std::size_t exhaustive_cap(std::size_t default_cap = 20) {
    if (const char* env = std::getenv("FANOUT_MAX_N")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 30) return v;
    }
    return default_cap;
}

/// Diagonal phases of an n-qubit operator in units of pi, reduced mod 2.
///
/// Stored as integer numerators over one common denominator D, each in
/// [0, 2D). Basis index x has qubit i in bit i.
class PhaseVector {
public:
    PhaseVector(std::size_t n, BigInt denominator, std::vector<BigInt> numerators)
        : n_(n), den_(std::move(denominator)), nums_(std::move(numerators)) {
        if (nums_.size() != (std::size_t{1} << n_)) throw Error(ErrorKind::DimensionMismatch, "phase vector length");
        BigInt period = 2 * den_;
        for (auto& v : nums_) v = mod_floor(v, period);
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return nums_.size(); }

    /// Phase of |x> divided by pi, in [0, 2).
    Rational entry(std::size_t x) const { return Rational(nums_.at(x), den_); }

    std::vector<Rational> entries() const {
        std::vector<Rational> out;
        out.reserve(nums_.size());
        for (std::size_t x = 0; x < nums_.size(); ++x) out.push_back(entry(x));
        return out;
    }

    /// Adds a constant phase (units of pi) to every entry.
    PhaseVector shifted(const Rational& c) const {
        BigInt d = lcm(den_, c.denominator());
        BigInt scale = d / den_;
        BigInt offset = c.numerator() * (d / c.denominator());
        std::vector<BigInt> v;
        v.reserve(nums_.size());
        for (const auto& a : nums_) v.push_back(a * scale + offset);
        return PhaseVector(n_, d, std::move(v));
    }

    /// If this - other is one constant mod 2, returns it.
    std::optional<Rational> constant_difference(const PhaseVector& other) const {
        if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "phase vectors of different size");
        BigInt d = lcm(den_, other.den_);
        BigInt sa = d / den_;
        BigInt sb = d / other.den_;
        BigInt period = 2 * d;
        BigInt first = mod_floor(nums_[0] * sa - other.nums_[0] * sb, period);
        for (std::size_t x = 1; x < nums_.size(); ++x) {
            if (mod_floor(nums_[x] * sa - other.nums_[x] * sb, period) != first) return std::nullopt;
        }
        return Rational(first, d);
    }

    friend bool operator==(const PhaseVector& a, const PhaseVector& b) {
        auto diff = a.constant_difference(b);
        return diff && diff->is_zero();
    }

private:
    std::size_t n_;
    BigInt den_;
    std::vector<BigInt> nums_;
};

/// Phases of U_n: |x> picks up i^{w(n-w)}, i.e. w(n-w)/2 in units of pi.
inline PhaseVector un_phase_vector(std::size_t n) {
    if (n < 1 || n > 24) throw Error(ErrorKind::TooLarge, "un_phase_vector supports 1 <= n <= 24");
    std::vector<BigInt> nums(std::size_t{1} << n);
    for (std::size_t x = 0; x < nums.size(); ++x) {
        std::uint64_t w = std::popcount(static_cast<std::uint64_t>(x));
        nums[x] = BigInt((w * (n - w)) % 4);
    }
    return PhaseVector(n, BigInt(2), std::move(nums));
}

/// Phases of e^{-iHt}: |x> picks up -sum k_{i,j} (-1)^{x_i+x_j}, where
/// tj_units[pair] = k_{i,j}/pi in lexicographic pair order.
inline PhaseVector evolved_phase_vector(std::size_t n, const std::vector<Rational>& tj_units) {
    if (tj_units.size() != pair_count(n))
        throw Error(ErrorKind::DimensionMismatch,
                    "expected " + std::to_string(pair_count(n)) + " entries, got " + std::to_string(tj_units.size()));
    if (n > 24) throw Error(ErrorKind::TooLarge, "evolved_phase_vector supports n <= 24");
    BigInt den = 1;
    for (const auto& k : tj_units) den = lcm(den, k.denominator());
    const BigInt period = 2 * den;
    std::vector<BigInt> coeff;
    coeff.reserve(tj_units.size());
    for (const auto& k : tj_units) coeff.push_back(mod_floor(k.numerator() * (den / k.denominator()), period));

    const std::size_t dim = std::size_t{1} << n;
    std::vector<BigInt> nums(dim);
    if (period < (BigInt(1) << 40)) {
        const std::int64_t p = period.convert_to<std::int64_t>();
        std::vector<std::int64_t> small;
        for (const auto& v : coeff) small.push_back(v.convert_to<std::int64_t>());
        std::int64_t total = 0;
        for (auto v : small) total = (total + v) % p;
        for (std::size_t x = 0; x < dim; ++x) {
            // sum s_ij k_ij = total - 2 * (sum over pairs with x_i != x_j)
            std::int64_t cut = 0;
            std::size_t idx = 0;
            for (std::size_t i = 0; i < n; ++i) {
                bool xi = (x >> i) & 1U;
                for (std::size_t j = i + 1; j < n; ++j, ++idx) {
                    if (xi != static_cast<bool>((x >> j) & 1U)) cut += small[idx];
                }
            }
            cut %= p;
            std::int64_t sum = ((total - 2 * cut) % p + p) % p;
            nums[x] = BigInt((p - sum) % p);
        }
    } else {
        BigInt total = 0;
        for (const auto& v : coeff) total += v;
        for (std::size_t x = 0; x < dim; ++x) {
            BigInt cut = 0;
            std::size_t idx = 0;
            for (std::size_t i = 0; i < n; ++i) {
                bool xi = (x >> i) & 1U;
                for (std::size_t j = i + 1; j < n; ++j, ++idx) {
                    if (xi != static_cast<bool>((x >> j) & 1U)) cut += coeff[idx];
                }
            }
            nums[x] = -(total - 2 * cut);
        }
    }
    return PhaseVector(n, std::move(den), std::move(nums));
}

inline PhaseVector evolved_phase_vector(const CouplingSet& c, const std::vector<Rational>& tj_units) {
    return evolved_phase_vector(c.n(), tj_units);
}

/// Outcome of the brute-force search for U_n = e^{i pi theta} e^{-iHt}.
struct RealizationWitness {
    bool realizable = false;
    /// t·J/pi for the reported J; 1/4 on success.
    std::optional<Rational> t_times_J_over_pi;
    /// theta/pi with U_n = e^{i theta} e^{-iHt}, in [0, 2).
    std::optional<Rational> theta_over_pi;
    /// The J used to fix t = pi/(4J).
    std::optional<Rational> coupling_unit;
    /// k_{i,j}/pi = J_{i,j} t/pi for the successful t.
    std::vector<Rational> tj_units;
};

/// Exhaustive phase comparison against U_n over all 2^n basis states.
///
/// A working t must put every J_{i,j} t/pi at an odd multiple of 1/4, so
/// t = k pi/(4g) with g the rational gcd and k odd; the phases only depend on
/// k mod 8, and the four candidates k = 1, 3, 5, 7 are tried in order.
inline RealizationWitness verify_un_realization(const CouplingSet& c) {
    const std::size_t n = c.n();
    if (n > exhaustive_cap()) throw Error(ErrorKind::TooLarge, "n exceeds exhaustive cap " + std::to_string(exhaustive_cap()));
    const PhaseVector target = un_phase_vector(n);
    RealizationWitness w;
    if (n == 1) {
        w.realizable = true;
        w.t_times_J_over_pi = Rational(BigInt(1), BigInt(4));
        w.theta_over_pi = Rational(0);
        w.coupling_unit = Rational(1);
        return w;
    }
    const Rational g = rational_gcd(c.values());
    for (int k : {1, 3, 5, 7}) {
        Rational J = g / Rational(k);
        std::vector<Rational> tj;
        tj.reserve(c.values().size());
        for (const auto& v : c.values()) tj.push_back(v / (J * Rational(4)));
        PhaseVector evolved = evolved_phase_vector(n, tj);
        if (auto theta = target.constant_difference(evolved)) {
            w.realizable = true;
            w.t_times_J_over_pi = Rational(BigInt(1), BigInt(4));
            w.theta_over_pi = *theta;
            w.coupling_unit = J;
            w.tj_units = std::move(tj);
            return w;
        }
    }
    return w;
}

/// theta/pi for equal couplings, not reduced mod 2.
inline Rational equal_coupling_theta(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::Precondition, "n >= 1");
    BigInt nn(n);
    return Rational(nn * nn - nn, BigInt(8));
}

}  // namespace fanout
