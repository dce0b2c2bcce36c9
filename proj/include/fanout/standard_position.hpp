#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fanout/adequacy.hpp"
#include "fanout/error.hpp"
#include "fanout/geometry.hpp"
#include "fanout/padic.hpp"
#include "fanout/squarefree.hpp"
#include "fanout/tables.hpp"

namespace fanout {

enum class ThickPattern { AllThin, ThreeCycle, FourCycle };

constexpr std::string_view to_string(ThickPattern p) {
    switch (p) {
        case ThickPattern::AllThin: return "AllThin";
        case ThickPattern::ThreeCycle: return "ThreeCycle";
        case ThickPattern::FourCycle: return "FourCycle";
    }
    return "?";
}

/// Four points at (0,0,0), (1,0,0), (a/2, t sqrt(n)/2, 0), (c/2, u sqrt(n)/2, e/2).
struct StandardPosition4 {
    Rational a, c, t, u;
    BigInt n = 3;
    Rational e_squared;
    ThickPattern thick_pattern = ThickPattern::AllThin;
    int l1 = 1;
    int l2 = 1;
};

/// Checks membership of a, c, t, u in Q_odd, n = 3 (mod 8), e^2 >= 0 and the
/// congruence system, and fills in l1, l2 and the thick pattern.
inline StandardPosition4 validate_standard_position(StandardPosition4 sp) {
    auto fail = [](const std::string& why) { throw Error(ErrorKind::InvariantViolation, why); };
    for (const auto* v : {&sp.a, &sp.c, &sp.t, &sp.u})
        if (!is_odd_unit(*v)) fail("coordinate " + v->to_string() + " is not a 2-adic unit");
    if (sp.n <= 0 || !is_squarefree(sp.n)) fail("radicand " + sp.n.str() + " is not positive square-free");
    if (mod_floor(sp.n, 8) != 3) fail("radicand " + sp.n.str() + " is not 3 mod 8");
    if (sp.e_squared.sign() < 0) fail("negative e^2");

    const Rational nn(sp.n);
    const Rational r13 = sp.a * sp.a + sp.t * sp.t * nn;
    const Rational r14 = sp.c * sp.c + sp.u * sp.u * nn + sp.e_squared;
    std::optional<int> l1;
    for (int l : {1, 3})
        if (scong2(r13, Rational(4 * l), 4) && scong2(r14, Rational(4 * l), 4)) l1 = l;
    if (!l1) fail("a^2+t^2n and c^2+u^2n+e^2 do not agree with 4 or 12 mod 16");
    std::optional<int> l2;
    for (int l : {1, 3})
        if (scong2(sp.a, Rational(l), 2) && scong2(sp.c, Rational(l), 2)) l2 = l;
    if (!l2) fail("a and c are not congruent mod 4");
    if (!scong2(sp.a * sp.c + sp.t * sp.u * nn, Rational(2 * (2 - *l2)), 3)) fail("ac+tun has the wrong residue mod 8");
    if (*l1 == 3 && *l2 == 3) fail("l1 = l2 = 3");
    sp.l1 = *l1;
    sp.l2 = *l2;
    if (*l1 == 1 && *l2 == 1) sp.thick_pattern = ThickPattern::AllThin;
    else if (*l1 == 1) sp.thick_pattern = ThickPattern::ThreeCycle;
    else sp.thick_pattern = ThickPattern::FourCycle;
    return sp;
}

/// Recovers standard-position parameters from squared distances, with
/// base = (index of s1, index of s2). The remaining two points become s3 and
/// s4 in index order. Distances are rescaled so that |s1 s2| = 1.
inline StandardPosition4 canonicalize_4pt(const PointConfig& cfg, std::pair<std::size_t, std::size_t> base) {
    if (cfg.size() != 4) throw Error(ErrorKind::Precondition, "canonicalize_4pt needs exactly 4 points");
    auto [p1, p2] = base;
    if (p1 == p2 || p1 > 3 || p2 > 3) throw Error(ErrorKind::Precondition, "invalid base edge");
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < 4; ++v)
        if (v != p1 && v != p2) rest.push_back(v);
    const std::size_t p3 = rest[0], p4 = rest[1];

    const Rational scale = cfg.squared_distance(p1, p2);
    auto D = [&](std::size_t i, std::size_t j) { return cfg.squared_distance(i, j) / scale; };
    const Rational one(1), two(2), four(4);

    StandardPosition4 sp;
    sp.a = one + D(p1, p3) - D(p2, p3);
    const Rational b2 = four * D(p1, p3) - sp.a * sp.a;
    sp.c = one + D(p1, p4) - D(p2, p4);
    const Rational de2 = four * D(p1, p4) - sp.c * sp.c;
    const Rational bd = (sp.a * sp.a + b2 + sp.c * sp.c + de2 - four * D(p3, p4) - two * sp.a * sp.c) / two;
    if (b2.sign() <= 0) throw Error(ErrorKind::InvariantViolation, "s1, s2, s3 are collinear");
    SquareFreeDecomposition sf = squarefree_decompose(b2);
    sp.t = sf.t;
    sp.n = sf.n;
    sp.u = bd / (sp.t * Rational(sp.n));
    sp.e_squared = de2 - sp.u * sp.u * Rational(sp.n);
    return validate_standard_position(std::move(sp));
}

/// The four standard-position points; e is written as k sqrt(m).
inline PointConfig standard_position_points(const StandardPosition4& sp) {
    const Rational half(BigInt(1), BigInt(2));
    QuadraticReal e;
    if (!sp.e_squared.is_zero()) {
        SquareFreeDecomposition ed = squarefree_decompose(sp.e_squared);
        e = QuadraticReal(Rational(0), ed.t * half, ed.n);
    }
    std::vector<Point> pts = {
        {Rational(0), Rational(0), Rational(0)},
        {Rational(1), Rational(0), Rational(0)},
        {sp.a * half, QuadraticReal(Rational(0), sp.t * half, sp.n), Rational(0)},
        {sp.c * half, QuadraticReal(Rational(0), sp.u * half, sp.n), e},
    };
    return PointConfig(3, std::move(pts));
}

inline SolutionCase solution_case(ThickPattern p) {
    switch (p) {
        case ThickPattern::ThreeCycle: return SolutionCase::PlanarThreeCycle;
        case ThickPattern::AllThin: return SolutionCase::AllThin;
        case ThickPattern::FourCycle: return SolutionCase::FourCycle;
    }
    return SolutionCase::AllThin;
}

/// Table lookup for a validated standard position.
inline RepresentativeColumn column_of(const StandardPosition4& sp) {
    const int n16 = static_cast<int>(mod_floor(sp.n, 16).convert_to<long>());
    if (n16 != 3 && n16 != 11) throw Error(ErrorKind::NoColumn, "radicand " + sp.n.str() + " is not 3 or 11 mod 16");
    std::vector<int> key;
    for (const auto* v : {&sp.a, &sp.c, &sp.t, &sp.u}) key.push_back(static_cast<int>(residue2(*v, 3)));
    auto cols = enumerate_representatives(solution_case(sp.thick_pattern), n16);
    const RepresentativeColumn* col = find_column(cols, key);
    if (!col) throw Error(ErrorKind::NoColumn, "residues match no representative solution");
    return *col;
}

struct U4Classification {
    StandardPosition4 standard;
    RepresentativeColumn column;
    /// Original point indices placed at s1..s4.
    std::array<std::size_t, 4> order{};
};

/// Puts an adequate 4-point configuration into standard position and names
/// its table column.
///
/// The base edge is the lexicographically first thin edge under the reported
/// J, oriented so that s1 is a vertex without thick edges when the other end
/// has some (the 3-cycle case needs s1 off the cycle).
inline U4Classification classify_u4(const PointConfig& cfg) {
    if (cfg.size() != 4) throw Error(ErrorKind::Precondition, "classify_u4 needs exactly 4 points");
    AdequacyReport rep = check_isq_adequacy(cfg);
    if (!rep.adequate) throw Error(ErrorKind::NotAdequate, "configuration is not isq-adequate for U_4");
    const ThicknessGraph& g = *rep.thickness;
    auto deg = g.degrees();
    std::optional<std::pair<std::size_t, std::size_t>> base;
    for (const auto& [i, j] : all_pairs(4)) {
        if (g.has_edge(i, j)) continue;
        base = (deg[i] != 0 && deg[j] == 0) ? std::pair{j, i} : std::pair{i, j};
        break;
    }
    if (!base) throw Error(ErrorKind::InvariantViolation, "no thin edge");
    U4Classification out;
    out.standard = canonicalize_4pt(cfg, *base);
    std::size_t k = 2;
    out.order[0] = base->first;
    out.order[1] = base->second;
    for (std::size_t v = 0; v < 4; ++v)
        if (v != base->first && v != base->second) out.order[k++] = v;

    // The predicted thick edges in s-labels must match the measured ones.
    auto thick = [&](std::size_t x, std::size_t y) { return g.has_edge(out.order[x], out.order[y]); };
    bool match = true;
    for (const auto& [x, y] : all_pairs(4)) {
        bool expect = false;
        switch (out.standard.thick_pattern) {
            case ThickPattern::AllThin: expect = false; break;
            case ThickPattern::ThreeCycle: expect = x != 0; break;
            case ThickPattern::FourCycle: expect = !((x == 0 && y == 1) || (x == 2 && y == 3)); break;
        }
        if (thick(x, y) != expect) match = false;
    }
    if (!match) throw Error(ErrorKind::InvariantViolation, "thick edges disagree with the standard-position pattern");
    out.column = column_of(out.standard);
    return out;
}

struct U3Result {
    bool adequate = false;
    std::optional<Rational> a;
    std::optional<Rational> t;
    std::optional<BigInt> n;
    std::optional<RepresentativeColumn> column;
};

/// Three points in standard position (0,0), (1,0), (a/2, t sqrt(n)/2) with
/// base edge (p1, p2): adequate iff a, b^2 are 2-adic units,
/// a^2 + b^2 = 4 (mod 16) and a = 1 (mod 4).
inline U3Result check_u3(const PointConfig& cfg) {
    if (cfg.size() != 3) throw Error(ErrorKind::Precondition, "check_u3 needs exactly 3 points");
    const Rational scale = cfg.squared_distance(0, 1);
    const Rational d13 = cfg.squared_distance(0, 2) / scale;
    const Rational d23 = cfg.squared_distance(1, 2) / scale;
    U3Result r;
    Rational a = Rational(1) + d13 - d23;
    Rational b2 = Rational(4) * d13 - a * a;
    if (b2.sign() <= 0) return r;
    SquareFreeDecomposition sf = squarefree_decompose(b2);
    r.a = a;
    r.t = sf.t;
    r.n = sf.n;
    if (!is_odd_unit(a) || !is_odd_unit(b2)) return r;
    if (!scong2(a * a + b2, Rational(4), 4) || !scong2(a, Rational(1), 2)) return r;
    r.adequate = true;
    const int n16 = static_cast<int>(mod_floor(sf.n, 16).convert_to<long>());
    if (n16 != 3 && n16 != 11) throw Error(ErrorKind::NoColumn, "radicand not 3 or 11 mod 16");
    auto cols = enumerate_representatives(SolutionCase::U3, n16);
    const RepresentativeColumn* col =
        find_column(cols, {static_cast<int>(residue2(a, 3)), static_cast<int>(residue2(sf.t, 3))});
    if (!col) throw Error(ErrorKind::NoColumn, "residues match no three-point solution");
    r.column = *col;
    return r;
}

/// Rotation about the z-axis plus dilation taking s3 to s2:
/// g = 4/(a^2+t^2 n), a' = g a, c' = g(ac+tun)/2, t' = -g t, u' = g(au-ct)/2.
/// Lengths scale by sqrt(g), so e'^2 = g e^2. The image is re-validated and
/// raises InvariantViolation when {s1, s3} was thick.
inline StandardPosition4 rotate_dilate_map(const StandardPosition4& sp) {
    const Rational nn(sp.n);
    const Rational gamma = Rational(4) / (sp.a * sp.a + sp.t * sp.t * nn);
    const Rational half(BigInt(1), BigInt(2));
    StandardPosition4 out;
    out.a = gamma * sp.a;
    out.c = gamma * (sp.a * sp.c + sp.t * sp.u * nn) * half;
    out.t = -gamma * sp.t;
    out.u = gamma * (sp.a * sp.u - sp.c * sp.t) * half;
    // Re-derive the radicand from b'^2 = t'^2 n; a rational factor cannot
    // change the square-free part, so t' and u' keep their meaning.
    SquareFreeDecomposition sf = squarefree_decompose(out.t * out.t * nn);
    if (sf.n != sp.n) throw Error(ErrorKind::InvariantViolation, "radicand changed under rotation");
    out.n = sf.n;
    out.e_squared = gamma * sp.e_squared;
    return validate_standard_position(std::move(out));
}

}  // namespace fanout
