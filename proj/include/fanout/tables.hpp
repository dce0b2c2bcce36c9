#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fanout/error.hpp"

namespace fanout {

enum class SolutionCase { PlanarThreeCycle, AllThin, FourCycle, U3 };

constexpr std::string_view to_string(SolutionCase c) {
    switch (c) {
        case SolutionCase::PlanarThreeCycle: return "planar3cycle";
        case SolutionCase::AllThin: return "allthin";
        case SolutionCase::FourCycle: return "fourcycle";
        case SolutionCase::U3: return "u3";
    }
    return "?";
}

inline SolutionCase parse_solution_case(std::string_view s) {
    for (auto c : {SolutionCase::PlanarThreeCycle, SolutionCase::AllThin, SolutionCase::FourCycle, SolutionCase::U3})
        if (to_string(c) == s) return c;
    throw Error(ErrorKind::BadInput, "unknown case '" + std::string(s) + "'");
}

/// One representative solution: residues mod 8 of (a, c, t, u), or of (a, t)
/// for three points.
struct RepresentativeColumn {
    SolutionCase which = SolutionCase::PlanarThreeCycle;
    int n_mod_16 = 3;
    char letter = 'A';
    /// The reflection pair containing this column, e.g. "GH".
    std::string column_label;
    std::vector<int> residues;

    friend bool operator==(const RepresentativeColumn&, const RepresentativeColumn&) = default;
};

namespace detail {

inline int mod(int v, int m) { return ((v % m) + m) % m; }

/// a^2 + t^2 n = 4 l1, c^2 + u^2 n + e^2 = 4 l1 (mod 16), a = c = l2 (mod 4),
/// ac + tun = 2(2 - l2) (mod 8), with e^2 = 4(3 - l2) (mod 16).
inline bool four_point_system(int a, int c, int t, int u, int n, int l1, int l2) {
    const int e2 = 4 * (3 - l2);
    return mod(a * a + t * t * n, 16) == mod(4 * l1, 16) && mod(c * c + u * u * n + e2, 16) == mod(4 * l1, 16) &&
           mod(a, 4) == l2 && mod(c, 4) == l2 && mod(a * c + t * u * n, 8) == mod(2 * (2 - l2), 8);
}

inline std::vector<std::array<int, 4>> solve_four_point(int n, int l1, int l2) {
    std::vector<std::array<int, 4>> out;
    for (int a : {1, 3, 5, 7})
        for (int c : {1, 3, 5, 7})
            for (int t : {1, 3, 5, 7})
                for (int u : {1, 3, 5, 7})
                    if (four_point_system(a, c, t, u, n, l1, l2)) out.push_back({a, c, t, u});
    return out;
}

inline void label_columns(std::vector<RepresentativeColumn>& cols, char first) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
        cols[i].letter = static_cast<char>(first + static_cast<int>(i));
        std::size_t base = i - i % 2;
        cols[i].column_label = std::string(1, static_cast<char>(first + static_cast<int>(base)));
        if (base + 1 < cols.size()) cols[i].column_label += static_cast<char>(first + static_cast<int>(base + 1));
    }
}

}  // namespace detail

/// Solves the residue system for the requested case over {1,3,5,7}.
///
/// Columns are in lexicographic (a, c, t, u) order, except the 4-cycle case:
/// its solutions are the all-thin ones with (a, t) and (c, u) exchanged, and
/// each is placed by (a, c) and then by the position of its all-thin partner.
inline std::vector<RepresentativeColumn> enumerate_representatives(SolutionCase which, int n_mod_16) {
    if (n_mod_16 != 3 && n_mod_16 != 11) throw Error(ErrorKind::BadInput, "n mod 16 must be 3 or 11");
    std::vector<RepresentativeColumn> cols;
    auto push = [&](std::vector<int> r) {
        RepresentativeColumn col;
        col.which = which;
        col.n_mod_16 = n_mod_16;
        col.residues = std::move(r);
        cols.push_back(std::move(col));
    };
    const int n = n_mod_16;
    switch (which) {
        case SolutionCase::PlanarThreeCycle:
            for (const auto& s : detail::solve_four_point(n, 1, 3)) push({s[0], s[1], s[2], s[3]});
            break;
        case SolutionCase::AllThin:
            for (const auto& s : detail::solve_four_point(n, 1, 1)) push({s[0], s[1], s[2], s[3]});
            break;
        case SolutionCase::FourCycle: {
            auto thin = detail::solve_four_point(n, 1, 1);
            auto sols = detail::solve_four_point(n, 3, 1);
            auto partner_rank = [&](const std::array<int, 4>& s) {
                std::array<int, 4> swapped{s[1], s[0], s[3], s[2]};
                auto it = std::find(thin.begin(), thin.end(), swapped);
                return static_cast<std::size_t>(it - thin.begin());
            };
            std::stable_sort(sols.begin(), sols.end(), [&](const auto& x, const auto& y) {
                if (x[0] != y[0]) return x[0] < y[0];
                if (x[1] != y[1]) return x[1] < y[1];
                return partner_rank(x) < partner_rank(y);
            });
            for (const auto& s : sols) push({s[0], s[1], s[2], s[3]});
            break;
        }
        case SolutionCase::U3:
            for (int a : {1, 3, 5, 7})
                for (int t : {1, 3, 5, 7})
                    if (detail::mod(a * a + t * t * n, 16) == 4 && detail::mod(a, 4) == 1) push({a, t});
            break;
    }
    // The n = 11 (mod 16) half continues the lettering of the n = 3 half.
    char first = n_mod_16 == 3 ? 'A' : (which == SolutionCase::U3 ? 'E' : 'I');
    detail::label_columns(cols, first);
    return cols;
}

/// The column with the given residues, if any.
inline const RepresentativeColumn* find_column(const std::vector<RepresentativeColumn>& cols,
                                               const std::vector<int>& residues) {
    for (const auto& c : cols)
        if (c.residues == residues) return &c;
    return nullptr;
}

}  // namespace fanout
