#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fanout/coupling.hpp"
#include "fanout/error.hpp"
#include "fanout/rational.hpp"

namespace fanout {

enum class FailureReason { None, NonOddRatios, OddDegreeVertex };

constexpr std::string_view to_string(FailureReason r) {
    switch (r) {
        case FailureReason::None: return "None";
        case FailureReason::NonOddRatios: return "NonOddRatios";
        case FailureReason::OddDegreeVertex: return "OddDegreeVertex";
    }
    return "Unknown";
}

struct AdequacyReport {
    bool adequate = false;
    std::optional<Rational> base_coupling;
    /// t·J in units of pi; 1/4 on success.
    std::optional<Rational> time_t_in_units;
    std::optional<ThicknessGraph> thickness;
    FailureReason failure_reason = FailureReason::None;
    /// Odd-degree vertices (0-based) when failure_reason is OddDegreeVertex.
    std::vector<std::size_t> odd_vertices;
};

/// Rational gcd of the couplings: gcd of numerators over lcm of denominators.
inline Rational rational_gcd(const std::vector<Rational>& values) {
    BigInt num = 0;
    BigInt den = 1;
    for (const auto& v : values) {
        num = gcd(num, v.numerator());
        den = lcm(den, v.denominator());
    }
    if (num == 0) return Rational(1);
    return Rational(num, den);
}

/// The rational gcd g of the couplings when every J_{i,j}/g is odd, else none.
///
/// The ratios J_{i,j}/g are integers with collective gcd 1, so not all are
/// even. Any admissible J must be g/k with k odd (otherwise some ratio fails to
/// be an integer, or all would be even), and k·J_{i,j}/g is odd exactly when
/// J_{i,j}/g is odd. So if some ratio is even no J exists.
///
/// For n = 1 there are no couplings and the unit coupling 1 is returned.
inline std::optional<Rational> base_coupling(const CouplingSet& c) {
    if (c.values().empty()) return Rational(1);
    Rational g = rational_gcd(c.values());
    for (const auto& v : c.values()) {
        Rational ratio = v / g;
        if (!boost::multiprecision::bit_test(ratio.numerator(), 0)) return std::nullopt;
    }
    return g;
}

/// Edges whose ratio J_{i,j}/J is 3 mod 4.
inline ThicknessGraph thickness_graph(const CouplingSet& c, const Rational& J) {
    ThicknessGraph g;
    g.n = c.n();
    std::size_t idx = 0;
    for (std::size_t i = 0; i < c.n(); ++i) {
        for (std::size_t j = i + 1; j < c.n(); ++j, ++idx) {
            Rational ratio = c.values()[idx] / J;
            if (!ratio.is_integer() || !boost::multiprecision::bit_test(ratio.numerator(), 0))
                throw Error(ErrorKind::NotOddMultiple,
                            "J_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}/J = " + ratio.to_string());
            if (mod_floor(ratio.numerator(), 4) == 3) g.thick_edges.emplace_back(i, j);
        }
    }
    return g;
}

/// Decides whether some J makes every ratio odd and the thick graph Eulerian.
///
/// Admissible J are g/k for odd k, and only k mod 4 affects thickness, so the
/// candidates g and g/3 are exhaustive. Dividing by 3 flips every edge, which
/// changes each vertex degree d into n-1-d. For odd n both candidates agree;
/// for even n the flip can turn an all-odd graph into an Eulerian one. The
/// report prefers g and falls back to g/3.
inline AdequacyReport check_adequacy(const CouplingSet& c) {
    AdequacyReport report;
    auto g = base_coupling(c);
    if (!g) {
        report.failure_reason = FailureReason::NonOddRatios;
        return report;
    }
    ThicknessGraph graph = thickness_graph(c, *g);
    auto odd = graph.odd_vertices();
    Rational J = *g;
    if (!odd.empty() && odd.size() == c.n()) {
        J = *g / Rational(3);
        graph = thickness_graph(c, J);
        odd = graph.odd_vertices();
    }
    if (!odd.empty()) {
        report.base_coupling = *g;
        report.thickness = thickness_graph(c, *g);
        report.failure_reason = FailureReason::OddDegreeVertex;
        report.odd_vertices = report.thickness->odd_vertices();
        return report;
    }
    report.adequate = true;
    report.base_coupling = J;
    report.time_t_in_units = Rational(BigInt(1), BigInt(4));
    report.thickness = std::move(graph);
    return report;
}

/// Graph-free restatement: some admissible J makes the product of the ratios
/// at every vertex congruent to 1 mod 4.
inline bool check_adequacy_product_form(const CouplingSet& c) {
    auto g = base_coupling(c);
    if (!g) return false;
    const std::size_t n = c.n();
    for (int k : {1, 3}) {
        Rational J = *g / Rational(k);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            BigInt product = 1;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                Rational ratio = c.at(i, j) / J;
                product = mod_floor(product * ratio.numerator(), 4);
            }
            ok = product == 1;
        }
        if (ok) return true;
    }
    return false;
}

/// Row of M_n for bit vector x (bit i of x is qubit i), dotted with g, mod 2.
inline bool mn_row_parity(std::size_t n, std::uint64_t x, const std::vector<BigInt>& g) {
    bool parity = false;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool xi = (x >> i) & 1U;
        for (std::size_t j = i + 1; j < n; ++j, ++idx) {
            bool xj = (x >> j) & 1U;
            if (xi != xj && boost::multiprecision::bit_test(g[idx], 0)) parity = !parity;
        }
    }
    return parity;
}

enum class KernelRows { WeightOne, All };

/// M_n g ≡ 0 (mod 2). WeightOne checks the n rows of Hamming weight 1, which
/// span the row space; All checks all 2^n rows (n <= 16).
inline bool mn_kernel_check(std::size_t n, const std::vector<BigInt>& g, KernelRows rows = KernelRows::WeightOne) {
    if (n < 2) throw Error(ErrorKind::DimensionMismatch, "M_n needs n >= 2");
    if (g.size() != pair_count(n))
        throw Error(ErrorKind::DimensionMismatch,
                    "expected " + std::to_string(pair_count(n)) + " entries, got " + std::to_string(g.size()));
    if (rows == KernelRows::WeightOne) {
        for (std::size_t r = 0; r < n; ++r)
            if (mn_row_parity(n, std::uint64_t{1} << r, g)) return false;
        return true;
    }
    if (n > 16) throw Error(ErrorKind::TooLarge, "full M_n check limited to n <= 16");
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        if (mn_row_parity(n, x, g)) return false;
    return true;
}

}  // namespace fanout
