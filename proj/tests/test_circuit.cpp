#include <gtest/gtest.h>

#include <complex>

#include "support/oracles.hpp"

using namespace fanout;

namespace {

Amplitude random_amplitude(oracle::Random& rng) {
    std::array<BigInt, 4> c;
    for (auto& v : c) v = rng.range(-20, 20);
    return Amplitude(c, rng.range(0, 6));
}

std::complex<double> omega() { return std::polar(1.0, std::acos(-1.0) / 4); }

/// Applies `c` to every basis input of a state and returns the outputs.
std::vector<StateVector> run_all(const Circuit& c) {
    std::vector<StateVector> out;
    StateVector probe(c.n_qubits());
    for (std::size_t x = 0; x < probe.dimension(); ++x) out.push_back(simulate(c, probe.bits_of(x)));
    return out;
}

}  // namespace

TEST(Amplitude, SqrtTwoIdentities) {
    Amplitude root2 = Amplitude::omega_power(1) - Amplitude::omega_power(3);
    EXPECT_EQ(root2 * root2, Amplitude(2));
    Amplitude inv = Amplitude(1).div_sqrt2();
    EXPECT_EQ(inv * root2, Amplitude(1));
    EXPECT_EQ(inv * inv * Amplitude(2), Amplitude(1));
    EXPECT_EQ(Amplitude::omega_power(8), Amplitude(1));
    EXPECT_EQ(Amplitude::omega_power(4), Amplitude(-1));
    EXPECT_EQ(Amplitude::omega_power(-1), Amplitude::omega_power(7));
}

TEST(Amplitude, CanonicalFormIsUnique) {
    // (2 + 0w + 0w^2 + 0w^3) / sqrt2^2 is 1.
    Amplitude a({BigInt(2), 0, 0, 0}, 2);
    EXPECT_EQ(a.half_powers(), 0);
    EXPECT_EQ(a.coeffs()[0], 1);
    Amplitude b({BigInt(1), 0, BigInt(1), 0}, 0);
    Amplitude c({BigInt(2), 0, BigInt(2), 0}, 2);
    EXPECT_EQ(b * Amplitude(1), c);
}

TEST(Amplitude, RingAxiomsAndEmbedding) {
    oracle::Random rng(31);
    for (int i = 0; i < 3000; ++i) {
        Amplitude a = random_amplitude(rng), b = random_amplitude(rng), c = random_amplitude(rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Amplitude());
        EXPECT_EQ(a.conj().conj(), a);
        // Rebuilding from the canonical form changes nothing.
        EXPECT_EQ(Amplitude(a.coeffs(), a.half_powers()), a);
        EXPECT_EQ(Amplitude(a.coeffs(), a.half_powers()).coeffs(), a.coeffs());

        std::complex<double> za = a.to_complex(), zb = b.to_complex();
        EXPECT_LT(std::abs((a * b).to_complex() - za * zb), 1e-12 * (1 + std::abs(za * zb)));
        EXPECT_LT(std::abs((a + b).to_complex() - (za + zb)), 1e-12 * (1 + std::abs(za) + std::abs(zb)));
        EXPECT_LT(std::abs(a.conj().to_complex() - std::conj(za)), 1e-12 * (1 + std::abs(za)));
    }
}

TEST(Amplitude, EmbeddingOfBasisPowers) {
    for (int j = 0; j < 8; ++j)
        EXPECT_LT(std::abs(Amplitude::omega_power(j).to_complex() - std::pow(omega(), j)), 1e-12);
}

TEST(Gates, SingleQubitExamples) {
    StateVector one = StateVector::basis("1");
    apply_gate(one, Gate::s(0));
    EXPECT_EQ(one[1], Amplitude::omega_power(2));

    StateVector u = StateVector::basis("110");
    apply_gate(u, Gate::un({0, 1, 2}));
    EXPECT_EQ(u[StateVector::index_of("110")], Amplitude(-1));

    EXPECT_EQ(gn_exponent(5), 0);
    EXPECT_EQ(gn_exponent(2), 3);
    EXPECT_EQ(gn_exponent(4), 1);
    EXPECT_EQ(gn_exponent(1), 0);

    StateVector h = simulate(Circuit(1).add(Gate::h(0)), "0");
    EXPECT_EQ(h[0], Amplitude(1).div_sqrt2());
    EXPECT_EQ(h[1], Amplitude(1).div_sqrt2());

    StateVector id = simulate(Circuit(2), "01");
    EXPECT_EQ(id, StateVector::basis("01"));
}

TEST(Gates, ValidationErrors) {
    Circuit c(2);
    EXPECT_THROW(c.add(Gate::h(2)), Error);
    EXPECT_THROW(c.add(Gate::cnot(1, 1)), Error);
    EXPECT_THROW(c.add(Gate::pn({0, 1}, 1)), Error);
    try {
        StateVector s(2);
        apply_gate(s, Gate::z(5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadQubit);
    }
    try {
        (void)simulate(c, "011");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadInput);
    }
}

TEST(Gates, NormIsPreservedOnRandomStates) {
    oracle::Random rng(32);
    const std::vector<Gate> pool = {Gate::h(0),     Gate::h(2),          Gate::s(1),        Gate::sdg(2),
                                    Gate::z(0),     Gate::s_pow(1, 3),   Gate::gn(2, 6),    Gate::gn_dag(0, 3),
                                    Gate::cnot(0, 2), Gate::un({0, 1, 2}), Gate::un_dag({1, 2}), Gate::pn({0, 1}, 2)};
    for (int trial = 0; trial < 50; ++trial) {
        StateVector s(3);
        for (std::size_t x = 0; x < s.dimension(); ++x) s[x] = random_amplitude(rng);
        const Amplitude norm = s.norm_squared();
        for (int step = 0; step < 20; ++step) {
            apply_gate(s, pool[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))]);
            ASSERT_EQ(s.norm_squared(), norm);
        }
    }
}

TEST(BuildCn, GateSequence) {
    Circuit c1 = build_cn(1);
    ASSERT_EQ(c1.gates().size(), 9U);
    EXPECT_EQ(c1.gates()[0], Gate::h(0));
    EXPECT_EQ(c1.gates()[4], Gate::cnot(0, 1));
    EXPECT_EQ(c1.gates()[8], Gate::h(0));

    Circuit c2 = build_cn(2);
    EXPECT_EQ(c2.gates()[2].kind, GateKind::Gn);
    EXPECT_EQ(gn_exponent(c2.gates()[2].param), 3);
    Circuit c4 = build_cn(4);
    EXPECT_EQ(gn_exponent(c4.gates()[2].param), 1);
    EXPECT_EQ(c4.gates()[1].qubits, qubit_range(0, 4));
    EXPECT_EQ(c4.gates()[7].kind, GateKind::UnDag);
}

TEST(Parity, ExamplesAndSmallN) {
    EXPECT_TRUE(verify_parity(1));
    StateVector s = simulate(build_cn(3), "1010");
    EXPECT_EQ(s, StateVector::basis("1010"));
    s = simulate(build_cn(3), "1000");
    EXPECT_EQ(s, StateVector::basis("1001"));
    s = simulate(build_cn(2), "110");
    EXPECT_EQ(s, StateVector::basis("110"));
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(verify_parity(n)) << n;
}

TEST(Parity, SizeLimit) { EXPECT_THROW(check_parity(13), Error); }

TEST(Fanout, Examples) {
    Circuit f1 = hadamard_layer(2);
    f1.append(build_cn(1)).append(hadamard_layer(2));
    EXPECT_EQ(simulate(f1, "01"), StateVector::basis("11"));
    Circuit f3 = hadamard_layer(4);
    f3.append(build_cn(3)).append(hadamard_layer(4));
    EXPECT_EQ(simulate(f3, "0001"), StateVector::basis("1111"));
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(verify_fanout(n)) << n;
}

TEST(Parity, GlobalPhaseOfUnIsIrrelevant) {
    // Replacing U_n by w^k U_n in both slots leaves C_n exactly P_n.
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::int64_t k = 0; k < 8; ++k) {
            Circuit c = build_cn(n, k);
            auto r = check_permutation(
                c, [](std::size_t x) { return std::popcount(static_cast<std::uint64_t>(x >> 1)) % 2 ? x ^ 1U : x; });
            EXPECT_TRUE(r.passed) << "n=" << n << " k=" << k;
        }
}

TEST(Parity, BrokenCircuitIsCaught) {
    Circuit c = build_cn(3);
    Circuit broken(4);
    for (const auto& g : c.gates()) broken.add(g.kind == GateKind::Gn ? Gate::gn(g.qubits[0], g.param + 1) : g);
    auto r = check_permutation(
        broken, [](std::size_t x) { return std::popcount(static_cast<std::uint64_t>(x >> 1)) % 2 ? x ^ 1U : x; });
    EXPECT_FALSE(r.passed);
    EXPECT_TRUE(r.counterexample.has_value());
}

TEST(Un, SwapInvariance) {
    for (std::size_t n = 2; n <= 6; ++n) {
        std::vector<std::size_t> order = qubit_range(0, n);
        const auto reference = run_all(Circuit(n).add(Gate::un(order)));
        oracle::Random rng(n);
        for (int k = 0; k < 10; ++k) {
            std::shuffle(order.begin(), order.end(), rng.engine());
            EXPECT_EQ(run_all(Circuit(n).add(Gate::un(order))), reference);
        }
    }
}

TEST(Un, Identities) {
    auto r3 = verify_un_identities(3);
    EXPECT_TRUE(r3.u2_odd_identity);
    EXPECT_TRUE(r3.u4_identity);
    auto r2 = verify_un_identities(2);
    EXPECT_TRUE(r2.cz_identity);
    EXPECT_TRUE(r2.un_from_two_parity);
    EXPECT_TRUE(verify_un_identities(4).u4_identity);
}

TEST(Un, TwoParityConstructionHoldsForEvenNOnly) {
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(verify_un_identities(n).un_from_two_parity, n % 2 == 0) << n;
}

TEST(Un, TwoParityConstructionWithAncillaPowerTwoNPlusOne) {
    // With S^{2n+1} on the ancilla in place of S the construction holds for every n.
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto nn = static_cast<std::int64_t>(n);
        const auto data = qubit_range(0, n);
        Circuit two(n + 1);
        two.add(Gate::pn(data, n));
        for (auto q : data) two.add(Gate::s_pow(q, 2 - nn));
        two.add(Gate::s_pow(n, 2 * nn + 1)).add(Gate::pn(data, n));
        Circuit un(n + 1);
        un.add(Gate::un(data));
        StateVector probe(n + 1);
        for (std::size_t x = 0; x < probe.dimension(); x += 2)
            EXPECT_EQ(simulate(two, probe.bits_of(x)), simulate(un, probe.bits_of(x))) << "n=" << n << " x=" << x;
    }
}
