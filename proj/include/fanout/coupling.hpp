#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "fanout/error.hpp"
#include "fanout/rational.hpp"

namespace fanout {

/// Unordered vertex pair, stored with first < second. Vertices are 0-based.
using Edge = std::pair<std::size_t, std::size_t>;

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Position of {i, j} in the lexicographic order (0,1), (0,2), ..., (n-2,n-1).
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    if (i == j || j >= n) throw Error(ErrorKind::DimensionMismatch, "invalid pair");
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

inline std::vector<Edge> all_pairs(std::size_t n) {
    std::vector<Edge> out;
    out.reserve(pair_count(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

/// Pairwise couplings J_{i,j} > 0 for n qubits, in lexicographic pair order.
class CouplingSet {
public:
    CouplingSet() = default;

    CouplingSet(std::size_t n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
        if (n_ < 1) throw Error(ErrorKind::InvalidCouplings, "qubit count must be >= 1");
        if (values_.size() != pair_count(n_))
            throw Error(ErrorKind::InvalidCouplings, "expected " + std::to_string(pair_count(n_)) + " couplings, got " +
                                                         std::to_string(values_.size()));
        for (const auto& v : values_) {
            if (v.sign() <= 0) throw Error(ErrorKind::InvalidCouplings, "coupling " + v.to_string() + " is not positive");
        }
    }

    /// Every pair gets the same value.
    static CouplingSet uniform(std::size_t n, const Rational& value) {
        return CouplingSet(n, std::vector<Rational>(pair_count(n), value));
    }

    std::size_t n() const noexcept { return n_; }
    const std::vector<Rational>& values() const noexcept { return values_; }

    const Rational& at(std::size_t i, std::size_t j) const { return values_[pair_index(n_, i, j)]; }

    CouplingSet scaled(const Rational& factor) const {
        std::vector<Rational> v = values_;
        for (auto& x : v) x *= factor;
        return CouplingSet(n_, std::move(v));
    }

    friend bool operator==(const CouplingSet&, const CouplingSet&) = default;

private:
    std::size_t n_ = 1;
    std::vector<Rational> values_;
};

/// The graph of thick edges; edges sorted lexicographically.
struct ThicknessGraph {
    std::size_t n = 0;
    std::vector<Edge> thick_edges;

    std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> deg(n, 0);
        for (const auto& [i, j] : thick_edges) {
            ++deg[i];
            ++deg[j];
        }
        return deg;
    }

    std::vector<std::size_t> odd_vertices() const {
        std::vector<std::size_t> out;
        auto deg = degrees();
        for (std::size_t v = 0; v < n; ++v)
            if (deg[v] % 2 == 1) out.push_back(v);
        return out;
    }

    bool has_edge(std::size_t i, std::size_t j) const {
        Edge e = i < j ? Edge{i, j} : Edge{j, i};
        return std::binary_search(thick_edges.begin(), thick_edges.end(), e);
    }

    friend bool operator==(const ThicknessGraph&, const ThicknessGraph&) = default;
};

}  // namespace fanout
