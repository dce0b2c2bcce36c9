#pragma once

#include <bit>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanout/coupling.hpp"
#include "fanout/geometry.hpp"

namespace fanout {

/// A named exhibit: a point configuration (or only couplings, for
/// arrangements that are not inverse-square) with its documented verdict.
struct BuiltinConfig {
    std::string name;
    std::string description;
    std::optional<PointConfig> points;
    CouplingSet couplings;
    bool expected_adequate = false;
    /// Table column of the point configuration, when it has one.
    std::optional<std::string> expected_column;
};

namespace detail {

inline QuadraticReal surd(const Rational& t, long n) { return QuadraticReal(Rational(0), t, BigInt(n)); }
inline Rational frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

inline BuiltinConfig from_points(std::string name, std::string description, std::size_t dim, std::vector<Point> pts,
                                 bool adequate, std::optional<std::string> column) {
    PointConfig cfg(dim, std::move(pts));
    CouplingSet c = couplings_from_points(cfg);
    return {std::move(name), std::move(description), std::move(cfg), std::move(c), adequate, std::move(column)};
}

/// Couplings given by a function of the vertex pair, in multiples of J = 1.
template <class F>
CouplingSet couplings_by_pair(std::size_t n, F value) {
    std::vector<Rational> v;
    for (const auto& [i, j] : all_pairs(n)) v.push_back(Rational(value(i, j)));
    return CouplingSet(n, std::move(v));
}

}  // namespace detail

inline std::map<std::string, BuiltinConfig> builtin_configs() {
    using detail::frac;
    using detail::surd;
    std::map<std::string, BuiltinConfig> out;
    auto put = [&](BuiltinConfig b) { out.emplace(b.name, std::move(b)); };

    put(detail::from_points("fig2-left", "equilateral triangle of side 2 with its center", 2,
                            {{Rational(0), Rational(0)},
                             {Rational(1), surd(frac(1, 3), 3)},
                             {Rational(2), Rational(0)},
                             {Rational(1), surd(Rational(1), 3)}},
                            true, "GH"));
    put(detail::from_points("fig2-right", "planar four-point arrangement with couplings 273, 39, 21, 91", 2,
                            {{Rational(0), Rational(0)},
                             {Rational(1), Rational(0)},
                             {frac(-5, 2), surd(frac(1, 2), 3)},
                             {frac(-5, 2), surd(frac(-1, 2), 3)}},
                            true, "GH"));
    put(detail::from_points("equilateral-3", "unit equilateral triangle", 2,
                            {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {frac(1, 2), surd(frac(1, 2), 3)}},
                            true, "AB"));
    put(detail::from_points("regular-tetrahedron", "unit regular tetrahedron", 3,
                            {{Rational(0), Rational(0), Rational(0)},
                             {Rational(1), Rational(0), Rational(0)},
                             {frac(1, 2), surd(frac(1, 2), 3), Rational(0)},
                             {frac(1, 2), surd(frac(1, 6), 3), surd(frac(1, 3), 6)}},
                            true, "AB"));
    put(detail::from_points("elongated-tetrahedron", "two opposite unit edges, the other four of length sqrt(3)", 3,
                            {{Rational(0), Rational(0), Rational(0)},
                             {Rational(1), Rational(0), Rational(0)},
                             {frac(1, 2), surd(frac(1, 2), 11), Rational(0)},
                             {frac(1, 2), surd(frac(9, 22), 11), surd(frac(1, 11), 110)}},
                            true, "IJ"));
    put(detail::from_points("unit-square", "corners of the unit square", 2,
                            {{Rational(0), Rational(0)},
                             {Rational(1), Rational(0)},
                             {Rational(1), Rational(1)},
                             {Rational(0), Rational(1)}},
                            false, std::nullopt));

    // Vertex i of the square is corner i going around; diagonals join i and i+2.
    put({"square-4", "square with 3J between neighbours and J across diagonals", std::nullopt,
         detail::couplings_by_pair(4, [](std::size_t i, std::size_t j) { return (j - i) % 2 == 1 ? 3 : 1; }), true,
         std::nullopt});
    // Cube vertices are 3-bit strings; the Hamming distance picks the coupling.
    put({"cube-8", "cube with 7J along edges, 3J across faces and J between antipodes", std::nullopt,
         detail::couplings_by_pair(8,
                                   [](std::size_t i, std::size_t j) {
                                       switch (std::popcount(i ^ j)) {
                                           case 1: return 7;
                                           case 2: return 3;
                                           default: return 1;
                                       }
                                   }),
         true, std::nullopt});
    // Octahedron vertices 2k and 2k+1 are the two ends of axis k.
    put({"octahedron-6", "octahedron with 3J between neighbours and J between antipodes", std::nullopt,
         detail::couplings_by_pair(6, [](std::size_t i, std::size_t j) { return i / 2 == j / 2 ? 1 : 3; }), true,
         std::nullopt});
    return out;
}

inline BuiltinConfig builtin_config(const std::string& name) {
    auto all = builtin_configs();
    auto it = all.find(name);
    if (it == all.end()) throw Error(ErrorKind::BadInput, "unknown builtin '" + name + "'");
    return it->second;
}

}  // namespace fanout
