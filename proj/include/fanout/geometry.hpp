#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fanout/adequacy.hpp"
#include "fanout/coupling.hpp"
#include "fanout/error.hpp"
#include "fanout/quadratic.hpp"

namespace fanout {

using Point = std::vector<QuadraticReal>;

/// Exact |p - q|^2; fails unless every irrational term cancels.
inline Rational squared_distance(const Point& p, const Point& q) {
    if (p.size() != q.size()) throw Error(ErrorKind::DimensionMismatch, "points of different dimension");
    SurdSum total;
    for (std::size_t k = 0; k < p.size(); ++k) {
        SurdSum diff = p[k].to_surd();
        diff -= q[k].to_surd();
        total += diff * diff;
    }
    if (!total.is_rational()) throw Error(ErrorKind::IrrationalDistance, "squared distance has irrational terms");
    return total.rational_part();
}

/// Points in R^2 or R^3 with pairwise distinct positions and rational
/// pairwise squared distances, both checked at construction.
class PointConfig {
public:
    PointConfig(std::size_t dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
        if (dim_ != 2 && dim_ != 3) throw Error(ErrorKind::InvalidConfig, "dimension must be 2 or 3");
        for (const auto& p : points_)
            if (p.size() != dim_) throw Error(ErrorKind::InvalidConfig, "point with wrong number of coordinates");
        const std::size_t n = points_.size();
        sq_.reserve(pair_count(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Rational d = fanout::squared_distance(points_[i], points_[j]);
                if (d.is_zero())
                    throw Error(ErrorKind::InvalidConfig,
                                "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
                sq_.push_back(std::move(d));
            }
        }
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<Point>& points() const noexcept { return points_; }
    const Point& operator[](std::size_t i) const { return points_.at(i); }

    /// d_{i,j}^2 for 0-based i != j.
    const Rational& squared_distance(std::size_t i, std::size_t j) const { return sq_[pair_index(size(), i, j)]; }
    const std::vector<Rational>& squared_distances() const noexcept { return sq_; }

private:
    std::size_t dim_;
    std::vector<Point> points_;
    std::vector<Rational> sq_;
};

/// J_{i,j} = 1 / d_{i,j}^2.
inline CouplingSet couplings_from_points(const PointConfig& cfg) {
    if (cfg.size() < 1) throw Error(ErrorKind::InvalidConfig, "empty configuration");
    std::vector<Rational> values;
    values.reserve(cfg.squared_distances().size());
    for (const auto& d : cfg.squared_distances()) values.push_back(d.reciprocal());
    return CouplingSet(cfg.size(), std::move(values));
}

enum class AdequacyMode { Strong, Weak };

/// Adequacy of the inverse-square couplings. The weak mode only asks for all
/// couplings to be odd multiples of one J.
inline AdequacyReport check_isq_adequacy(const PointConfig& cfg, AdequacyMode mode = AdequacyMode::Strong) {
    CouplingSet c = couplings_from_points(cfg);
    if (mode == AdequacyMode::Strong) return check_adequacy(c);
    AdequacyReport r;
    auto g = base_coupling(c);
    if (!g) {
        r.failure_reason = FailureReason::NonOddRatios;
        return r;
    }
    r.adequate = true;
    r.base_coupling = *g;
    r.time_t_in_units = Rational(BigInt(1), BigInt(4));
    r.thickness = thickness_graph(c, *g);
    return r;
}

enum class TripleKind { Collinear, RightTriangle, Neither };

constexpr std::string_view to_string(TripleKind k) {
    switch (k) {
        case TripleKind::Collinear: return "Collinear";
        case TripleKind::RightTriangle: return "RightTriangle";
        case TripleKind::Neither: return "Neither";
    }
    return "?";
}

/// Classification from the three squared side lengths. Collinearity is a
/// vanishing 16·area^2 = 2(AB + BC + CA) - (A^2 + B^2 + C^2).
inline TripleKind triple_exclusion_sq(const Rational& A, const Rational& B, const Rational& C) {
    Rational area16 = Rational(2) * (A * B + B * C + C * A) - (A * A + B * B + C * C);
    if (area16.is_zero()) return TripleKind::Collinear;
    if (A == B + C || B == A + C || C == A + B) return TripleKind::RightTriangle;
    return TripleKind::Neither;
}

inline TripleKind triple_exclusion(const Point& p, const Point& q, const Point& r) {
    return triple_exclusion_sq(squared_distance(p, q), squared_distance(q, r), squared_distance(p, r));
}

}  // namespace fanout
