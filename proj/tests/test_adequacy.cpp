#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace fanout;
using oracle::frac;

namespace {

CouplingSet ints(std::size_t n, std::vector<long long> v) {
    std::vector<Rational> r;
    for (auto x : v) r.emplace_back(x);
    return CouplingSet(n, std::move(r));
}

std::vector<Edge> edges(std::initializer_list<Edge> e) { return e; }

}  // namespace

TEST(CouplingSet, PairIndexing) {
    EXPECT_EQ(pair_count(4), 6U);
    EXPECT_EQ(pair_index(4, 0, 1), 0U);
    EXPECT_EQ(pair_index(4, 3, 2), 5U);
    auto c = ints(3, {1, 2, 3});
    EXPECT_EQ(c.at(2, 0), Rational(2));
    EXPECT_EQ(c.at(0, 2), Rational(2));
    EXPECT_THROW(ints(3, {1, 2}), Error);
    EXPECT_THROW(ints(3, {1, 0, 2}), Error);
    EXPECT_THROW(ints(3, {1, -1, 2}), Error);
}

TEST(BaseCoupling, Examples) {
    EXPECT_EQ(base_coupling(ints(4, {9, 3, 3, 9, 9, 3})), Rational(3));
    EXPECT_EQ(base_coupling(CouplingSet::uniform(3, Rational(5))), Rational(5));
    EXPECT_FALSE(base_coupling(ints(3, {1, 2, 3})).has_value());
    EXPECT_FALSE(oracle::un_realizable_grid(ints(3, {1, 2, 3})));
    EXPECT_EQ(base_coupling(CouplingSet(2, {frac(3, 4)})), frac(3, 4));
    EXPECT_EQ(base_coupling(CouplingSet(3, {frac(1, 6), frac(1, 2), frac(5, 6)})), frac(1, 6));
}

TEST(ThicknessGraph, Examples) {
    // Equilateral triangle of side 2 with its center: couplings 9 and 3 in units of 1.
    auto fig = ints(4, {9, 3, 3, 9, 9, 3});
    EXPECT_EQ(thickness_graph(fig, Rational(1)).thick_edges, edges({{0, 2}, {0, 3}, {2, 3}}));
    EXPECT_EQ(thickness_graph(fig, Rational(3)).thick_edges, edges({{0, 1}, {1, 2}, {1, 3}}));
    EXPECT_TRUE(thickness_graph(CouplingSet::uniform(5, Rational(2)), Rational(2)).thick_edges.empty());
    EXPECT_THROW(thickness_graph(fig, Rational(2)), Error);

    auto cube = builtin_config("cube-8").couplings;
    auto g = thickness_graph(cube, Rational(1));
    EXPECT_EQ(g.thick_edges.size(), 24U);
    for (const auto& [i, j] : g.thick_edges) EXPECT_NE(std::popcount(i ^ j), 3);
}

TEST(CheckAdequacy, TriangleWithCenterUsesTheEvenDegreeChoiceOfJ) {
    auto r = check_adequacy(ints(4, {9, 3, 3, 9, 9, 3}));
    ASSERT_TRUE(r.adequate);
    EXPECT_EQ(r.base_coupling, Rational(1));
    EXPECT_EQ(r.time_t_in_units, frac(1, 4));
    EXPECT_EQ(r.thickness->thick_edges, edges({{0, 2}, {0, 3}, {2, 3}}));
}

TEST(CheckAdequacy, OddDegreeFailure) {
    auto r = check_adequacy(ints(3, {3, 1, 1}));
    EXPECT_FALSE(r.adequate);
    EXPECT_EQ(r.failure_reason, FailureReason::OddDegreeVertex);
    EXPECT_EQ(r.odd_vertices, (std::vector<std::size_t>{0, 1}));
    EXPECT_FALSE(oracle::un_realizable_grid(ints(3, {3, 1, 1})));
}

TEST(CheckAdequacy, NonOddFailureAndDegenerateCases) {
    auto r = check_adequacy(ints(3, {1, 2, 1}));
    EXPECT_FALSE(r.adequate);
    EXPECT_EQ(r.failure_reason, FailureReason::NonOddRatios);
    EXPECT_FALSE(r.base_coupling.has_value());

    auto one = check_adequacy(CouplingSet(1, {}));
    EXPECT_TRUE(one.adequate);
    EXPECT_TRUE(one.thickness->thick_edges.empty());
}

TEST(CheckAdequacy, Octahedron) {
    auto r = check_adequacy(builtin_config("octahedron-6").couplings);
    EXPECT_TRUE(r.adequate);
    EXPECT_EQ(r.thickness->thick_edges.size(), 12U);
}

TEST(CheckAdequacy, ProductFormExamples) {
    EXPECT_TRUE(check_adequacy_product_form(ints(4, {273, 39, 39, 21, 21, 91})));
    EXPECT_TRUE(check_adequacy_product_form(CouplingSet::uniform(7, Rational(4))));
    EXPECT_FALSE(check_adequacy_product_form(ints(3, {3, 1, 1})));
}

TEST(CheckAdequacy, ProductFormAgreesWithGraphForm) {
    oracle::Random rng(11);
    for (int i = 0; i < 2000; ++i) {
        auto n = static_cast<std::size_t>(rng.range(2, 8));
        auto c = oracle::random_adequate(rng, n);
        if (n >= 3 && rng.coin()) c = oracle::perturb(rng, c);
        EXPECT_EQ(check_adequacy(c).adequate, check_adequacy_product_form(c));
    }
}

TEST(CheckAdequacy, AgreesWithGridOracle) {
    oracle::Random rng(12);
    for (int i = 0; i < 600; ++i) {
        auto n = static_cast<std::size_t>(rng.range(2, 6));
        auto c = oracle::random_adequate(rng, n);
        const bool perturbed = n >= 3 && i % 2;
        if (perturbed) c = oracle::perturb(rng, c);
        EXPECT_EQ(check_adequacy(c).adequate, oracle::un_realizable_grid(c)) << "n=" << n;
        EXPECT_EQ(oracle::un_realizable_grid(c), !perturbed) << "n=" << n;
    }
}

TEST(CheckAdequacy, ScalingInvariance) {
    oracle::Random rng(13);
    for (int i = 0; i < 500; ++i) {
        auto n = static_cast<std::size_t>(rng.range(2, 7));
        auto c = oracle::random_adequate(rng, n);
        if (n >= 3 && rng.coin()) c = oracle::perturb(rng, c);
        Rational lambda = rng.positive_rational();
        auto a = check_adequacy(c), b = check_adequacy(c.scaled(lambda));
        EXPECT_EQ(a.adequate, b.adequate);
        ASSERT_EQ(a.thickness.has_value(), b.thickness.has_value());
        if (a.thickness) {
            EXPECT_EQ(a.thickness->thick_edges, b.thickness->thick_edges);
        }
    }
}

TEST(CheckAdequacy, ReportInvariants) {
    oracle::Random rng(14);
    for (int i = 0; i < 500; ++i) {
        auto c = oracle::random_adequate(rng, static_cast<std::size_t>(rng.range(2, 8)));
        auto r = check_adequacy(c);
        ASSERT_TRUE(r.adequate);
        for (const auto& v : c.values()) {
            Rational ratio = v / *r.base_coupling;
            EXPECT_TRUE(ratio.is_integer());
            EXPECT_EQ(ratio.numerator() % 2, 1);
        }
        for (auto d : r.thickness->degrees()) EXPECT_EQ(d % 2, 0U);
    }
}

TEST(MnKernel, Examples) {
    std::vector<BigInt> g111{1, 1, 1};
    EXPECT_TRUE(mn_kernel_check(3, g111));
    EXPECT_TRUE(mn_kernel_check(3, g111, KernelRows::All));
    std::vector<BigInt> g100{1, 0, 0};
    EXPECT_FALSE(mn_kernel_check(3, g100));
    EXPECT_FALSE(mn_kernel_check(3, g100, KernelRows::All));
    for (std::size_t n = 2; n <= 6; ++n) EXPECT_TRUE(mn_kernel_check(n, std::vector<BigInt>(pair_count(n), 0)));
    try {
        (void)mn_kernel_check(4, g111);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(MnKernel, KernelIsTheEvenDegreeCondition) {
    // g in the kernel iff every vertex meets an even number of odd entries.
    oracle::Random rng(15);
    for (int i = 0; i < 500; ++i) {
        auto n = static_cast<std::size_t>(rng.range(2, 9));
        std::vector<BigInt> g;
        std::vector<int> deg(n, 0);
        for (const auto& [a, b] : all_pairs(n)) {
            g.emplace_back(rng.range(0, 5));
            if (g.back() % 2 == 1) ++deg[a], ++deg[b];
        }
        bool even = std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
        EXPECT_EQ(mn_kernel_check(n, g, KernelRows::All), even);
    }
}
