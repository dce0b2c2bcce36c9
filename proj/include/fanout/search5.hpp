#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "fanout/error.hpp"
#include "fanout/geometry.hpp"
#include "fanout/squarefree.hpp"
#include "fanout/tables.hpp"

namespace fanout {

/// Five points are weakly isq-adequate for U_5.
inline bool check_5point_candidate(const PointConfig& cfg) {
    if (cfg.size() != 5) throw Error(ErrorKind::Precondition, "five-point check needs exactly 5 points");
    return check_isq_adequacy(cfg, AdequacyMode::Weak).adequate;
}

struct Search5Result {
    std::size_t trials = 0;
    /// Four-point bases that passed the weak check before extension.
    std::size_t weak_bases = 0;
    std::size_t candidates_checked = 0;
    std::vector<PointConfig> found;
};

namespace detail {

class SearchRng {
public:
    SearchRng(std::uint64_t seed, std::uint64_t trial) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
        engine_.seed(seq);
    }

    /// Uniform in [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(v.size()) - 1))];
    }

    /// A 2-adic unit congruent to r mod 8: (r m + 8k)/m with m odd.
    Rational lift(int r) {
        std::int64_t m = 2 * range(0, 7) + 1;
        std::int64_t k = range(-3, 3);
        return Rational(BigInt(r * m + 8 * k), BigInt(m));
    }

    /// Positive 2-adic unit.
    Rational odd_positive() {
        return Rational(BigInt(2 * range(0, 10) + 1), BigInt(2 * range(0, 7) + 1));
    }

private:
    std::mt19937_64 engine_;
};

inline const std::vector<long>& radicands_for(int n_mod_16) {
    static const std::vector<long> three = {3, 19, 35, 51, 67, 83, 115};
    static const std::vector<long> eleven = {11, 43, 59, 91, 107, 123, 139};
    return n_mod_16 == 3 ? three : eleven;
}

inline const std::vector<long>& extra_radicands() {
    static const std::vector<long> v = {1, 2, 3, 5, 6, 7, 10, 11, 14, 15};
    return v;
}

}  // namespace detail

/// Seeded refutation harness for five-point weak adequacy.
///
/// Each trial lifts a random table column to a standard-position base
/// (0,0,0), (1,0,0), (a/2, t sqrt(n)/2, 0), (c/2, u sqrt(n)/2, e/2) and
/// tries two fifth points (f/2, v sqrt(n)/2, h/2), with h sharing the
/// radicand of e so that every squared distance stays rational: one whose
/// residues copy the base and one drawn from a small rational grid.
/// Trial i uses its own generator seeded from (seed, i).
inline Search5Result search_5point(std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw Error(ErrorKind::Precondition, "search needs at least one trial");
    std::array<std::vector<RepresentativeColumn>, 6> tables;
    const std::array<SolutionCase, 3> cases = {SolutionCase::PlanarThreeCycle, SolutionCase::AllThin,
                                               SolutionCase::FourCycle};
    for (std::size_t ci = 0; ci < 3; ++ci) {
        tables[2 * ci] = enumerate_representatives(cases[ci], 3);
        tables[2 * ci + 1] = enumerate_representatives(cases[ci], 11);
    }

    const Rational half(BigInt(1), BigInt(2));
    const Rational zero(0);
    Search5Result out;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        ++out.trials;
        detail::SearchRng rng(seed, trial);
        const std::size_t ti = static_cast<std::size_t>(rng.range(0, 5));
        const auto& col = rng.pick(tables[ti]);
        const BigInt n(rng.pick(detail::radicands_for(col.n_mod_16)));
        const Rational a = rng.lift(col.residues[0]);
        const Rational c = rng.lift(col.residues[1]);
        const Rational t = rng.lift(col.residues[2]);
        const Rational u = rng.lift(col.residues[3]);

        // e^2 = 0 or 16w in the planar case, 8w otherwise; e = k sqrt(m).
        Rational e2;
        if (col.which == SolutionCase::PlanarThreeCycle) {
            if (rng.range(0, 1) == 1) e2 = Rational(16) * rng.odd_positive();
        } else {
            e2 = Rational(8) * rng.odd_positive();
        }
        BigInt m = 1;
        Rational k = 0;
        if (!e2.is_zero()) {
            auto sf = squarefree_decompose(e2);
            m = sf.n;
            k = sf.t;
        } else {
            m = BigInt(rng.pick(detail::extra_radicands()));
        }

        auto point = [&](const Rational& x, const Rational& y, const Rational& z) {
            return Point{x * half, QuadraticReal(zero, y * half, n), QuadraticReal(zero, z * half, m)};
        };
        std::vector<Point> base = {point(zero, zero, zero), point(Rational(2), zero, zero), point(a, t, zero),
                                   point(c, u, k)};
        try {
            PointConfig four(3, base);
            if (!check_isq_adequacy(four, AdequacyMode::Weak).adequate) continue;
        } catch (const Error&) {
            continue;
        }
        ++out.weak_bases;

        // Structured: f and v lifted like a and t, h^2 a scaled copy of e^2 or 8w.
        Rational f1 = rng.lift(col.residues[rng.range(0, 1) == 0 ? 0 : 1]);
        Rational v1 = rng.lift(col.residues[rng.range(0, 1) == 0 ? 2 : 3]);
        Rational w1 = k.is_zero() ? Rational(2) * rng.odd_positive() : k * rng.odd_positive();
        if (rng.range(0, 3) == 0) w1 = zero;
        // Grid: small rationals with denominators up to 8.
        auto grid = [&]() { return Rational(BigInt(rng.range(-24, 24)), BigInt(rng.range(1, 8))); };
        Rational f2 = grid(), v2 = grid(), w2 = grid();

        for (const auto& [f, v, w] : {std::array<Rational, 3>{f1, v1, w1}, std::array<Rational, 3>{f2, v2, w2}}) {
            std::vector<Point> five = base;
            five.push_back(point(f, v, w));
            try {
                PointConfig cfg(3, std::move(five));
                ++out.candidates_checked;
                if (check_5point_candidate(cfg)) out.found.push_back(cfg);
            } catch (const Error&) {
                // Coincident points; not a candidate.
            }
        }
    }
    return out;
}

}  // namespace fanout
