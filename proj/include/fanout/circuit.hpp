#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanout/amplitude.hpp"
#include "fanout/error.hpp"

namespace fanout {

/// Dense state over n qubits. Qubit 0 is the most significant bit of the
/// basis index, so basis strings read left to right as qubit 0, 1, ...
class StateVector {
public:
    explicit StateVector(std::size_t n_qubits) : n_(n_qubits), amps_(std::size_t{1} << n_qubits) {
        if (n_qubits > 24) throw Error(ErrorKind::TooLarge, "state vector limited to 24 qubits");
    }

    /// The basis state named by a string of '0'/'1' characters.
    static StateVector basis(std::string_view bits) {
        StateVector s(bits.size());
        s.amps_[index_of(bits)] = Amplitude(1);
        return s;
    }

    static std::size_t index_of(std::string_view bits) {
        std::size_t idx = 0;
        for (char ch : bits) {
            if (ch != '0' && ch != '1') throw Error(ErrorKind::BadInput, "basis string must be 0/1: '" + std::string(bits) + "'");
            idx = (idx << 1) | static_cast<std::size_t>(ch == '1');
        }
        return idx;
    }

    std::string bits_of(std::size_t idx) const {
        std::string s(n_, '0');
        for (std::size_t q = 0; q < n_; ++q)
            if ((idx >> (n_ - 1 - q)) & 1U) s[q] = '1';
        return s;
    }

    std::size_t n_qubits() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return amps_.size(); }

    /// Bit mask of qubit q inside a basis index.
    std::size_t mask(std::size_t q) const { return std::size_t{1} << (n_ - 1 - q); }

    Amplitude& operator[](std::size_t i) { return amps_[i]; }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
    const std::vector<Amplitude>& amplitudes() const noexcept { return amps_; }

    /// Exact sum of |amplitude|^2.
    Amplitude norm_squared() const {
        Amplitude total;
        for (const auto& a : amps_)
            if (!a.is_zero()) total += a * a.conj();
        return total;
    }

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    std::size_t n_;
    std::vector<Amplitude> amps_;
};

enum class GateKind { H, S, Sdg, Z, SPow, Gn, GnDag, CNOT, Un, UnDag, Pn };

constexpr std::string_view to_string(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "Sdg";
        case GateKind::Z: return "Z";
        case GateKind::SPow: return "SPow";
        case GateKind::Gn: return "Gn";
        case GateKind::GnDag: return "GnDag";
        case GateKind::CNOT: return "CNOT";
        case GateKind::Un: return "Un";
        case GateKind::UnDag: return "UnDag";
        case GateKind::Pn: return "Pn";
    }
    return "?";
}

/// One gate of the closed gate set.
///
/// Single-qubit gates act on qubits[0]. CNOT uses qubits[0] as control and
/// `target`. Un/UnDag act on all listed qubits; Pn XORs the parity of the
/// listed qubits into `target`. `param` is n for Gn/GnDag (G_n = S^{1-n}), the
/// exponent for SPow, and an extra global phase w^param for Un/UnDag.
struct Gate {
    GateKind kind;
    std::vector<std::size_t> qubits;
    std::size_t target = 0;
    std::int64_t param = 0;

    static Gate h(std::size_t q) { return {GateKind::H, {q}}; }
    static Gate s(std::size_t q) { return {GateKind::S, {q}}; }
    static Gate sdg(std::size_t q) { return {GateKind::Sdg, {q}}; }
    static Gate z(std::size_t q) { return {GateKind::Z, {q}}; }
    static Gate s_pow(std::size_t q, std::int64_t e) { return {GateKind::SPow, {q}, 0, e}; }
    static Gate gn(std::size_t q, std::int64_t n) { return {GateKind::Gn, {q}, 0, n}; }
    static Gate gn_dag(std::size_t q, std::int64_t n) { return {GateKind::GnDag, {q}, 0, n}; }
    static Gate cnot(std::size_t control, std::size_t target) { return {GateKind::CNOT, {control}, target}; }
    static Gate un(std::vector<std::size_t> qs, std::int64_t phase = 0) { return {GateKind::Un, std::move(qs), 0, phase}; }
    static Gate un_dag(std::vector<std::size_t> qs, std::int64_t phase = 0) {
        return {GateKind::UnDag, std::move(qs), 0, phase};
    }
    static Gate pn(std::vector<std::size_t> qs, std::size_t target) { return {GateKind::Pn, std::move(qs), target}; }

    std::string to_string() const {
        std::string s(fanout::to_string(kind));
        s += "(";
        for (std::size_t i = 0; i < qubits.size(); ++i) s += (i ? "," : "") + std::to_string(qubits[i]);
        if (kind == GateKind::CNOT || kind == GateKind::Pn) s += "->" + std::to_string(target);
        s += ")";
        return s;
    }

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Exponent e with S^{1-n} = S^e, reduced to 0..3.
inline int gn_exponent(std::int64_t n) { return static_cast<int>((((1 - n) % 4) + 4) % 4); }

class Circuit {
public:
    explicit Circuit(std::size_t n_qubits) : n_(n_qubits) {}

    std::size_t n_qubits() const noexcept { return n_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }

    Circuit& add(Gate g) {
        validate(g);
        gates_.push_back(std::move(g));
        return *this;
    }

    Circuit& append(const Circuit& other) {
        if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "circuit widths differ");
        for (const auto& g : other.gates_) gates_.push_back(g);
        return *this;
    }

private:
    void check_qubit(std::size_t q) const {
        if (q >= n_) throw Error(ErrorKind::BadQubit, "qubit " + std::to_string(q) + " out of range");
    }

    void validate(const Gate& g) const {
        if (g.qubits.empty()) throw Error(ErrorKind::BadQubit, "gate without qubits");
        for (auto q : g.qubits) check_qubit(q);
        switch (g.kind) {
            case GateKind::CNOT:
                check_qubit(g.target);
                if (g.qubits.size() != 1 || g.qubits[0] == g.target)
                    throw Error(ErrorKind::BadQubit, "CNOT control must differ from target");
                break;
            case GateKind::Pn:
                check_qubit(g.target);
                for (auto q : g.qubits)
                    if (q == g.target) throw Error(ErrorKind::BadQubit, "parity target inside its input list");
                break;
            case GateKind::Un:
            case GateKind::UnDag:
                break;
            default:
                if (g.qubits.size() != 1) throw Error(ErrorKind::BadQubit, "single-qubit gate with several qubits");
        }
    }

    std::size_t n_;
    std::vector<Gate> gates_;
};

namespace detail {

inline void apply_phase_on_one(StateVector& s, std::size_t q, std::int64_t omega_exp) {
    const std::size_t m = s.mask(q);
    for (std::size_t x = 0; x < s.dimension(); ++x)
        if ((x & m) && !s[x].is_zero()) s[x].rotate(omega_exp);
}

inline std::size_t masked_weight(std::size_t x, std::size_t mask) {
    return static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(x & mask)));
}

}  // namespace detail

/// Applies one gate in place.
inline void apply_gate(StateVector& s, const Gate& g) {
    for (auto q : g.qubits)
        if (q >= s.n_qubits()) throw Error(ErrorKind::BadQubit, "qubit " + std::to_string(q) + " out of range");
    if ((g.kind == GateKind::CNOT || g.kind == GateKind::Pn) && g.target >= s.n_qubits())
        throw Error(ErrorKind::BadQubit, "target " + std::to_string(g.target) + " out of range");

    switch (g.kind) {
        case GateKind::H: {
            const std::size_t m = s.mask(g.qubits[0]);
            for (std::size_t x = 0; x < s.dimension(); ++x) {
                if (x & m) continue;
                Amplitude& a0 = s[x];
                Amplitude& a1 = s[x | m];
                if (a0.is_zero() && a1.is_zero()) continue;
                Amplitude sum = a0 + a1;
                Amplitude diff = a0 - a1;
                a0 = std::move(sum.div_sqrt2());
                a1 = std::move(diff.div_sqrt2());
            }
            break;
        }
        case GateKind::S: detail::apply_phase_on_one(s, g.qubits[0], 2); break;
        case GateKind::Sdg: detail::apply_phase_on_one(s, g.qubits[0], 6); break;
        case GateKind::Z: detail::apply_phase_on_one(s, g.qubits[0], 4); break;
        case GateKind::SPow: detail::apply_phase_on_one(s, g.qubits[0], 2 * g.param); break;
        case GateKind::Gn: detail::apply_phase_on_one(s, g.qubits[0], 2 * gn_exponent(g.param)); break;
        case GateKind::GnDag: detail::apply_phase_on_one(s, g.qubits[0], -2 * gn_exponent(g.param)); break;
        case GateKind::CNOT: {
            const std::size_t c = s.mask(g.qubits[0]);
            const std::size_t t = s.mask(g.target);
            for (std::size_t x = 0; x < s.dimension(); ++x)
                if ((x & c) && !(x & t)) std::swap(s[x], s[x | t]);
            break;
        }
        case GateKind::Un:
        case GateKind::UnDag: {
            std::size_t mask = 0;
            for (auto q : g.qubits) mask |= s.mask(q);
            const std::int64_t m = static_cast<std::int64_t>(g.qubits.size());
            const std::int64_t sign = g.kind == GateKind::Un ? 1 : -1;
            for (std::size_t x = 0; x < s.dimension(); ++x) {
                if (s[x].is_zero()) continue;
                auto w = static_cast<std::int64_t>(detail::masked_weight(x, mask));
                // i^{w(m-w)} = w^{2 w (m-w)}
                s[x].rotate(sign * (2 * w * (m - w) + g.param));
            }
            break;
        }
        case GateKind::Pn: {
            std::size_t mask = 0;
            for (auto q : g.qubits) mask |= s.mask(q);
            const std::size_t t = s.mask(g.target);
            for (std::size_t x = 0; x < s.dimension(); ++x)
                if (!(x & t) && (detail::masked_weight(x, mask) & 1U)) std::swap(s[x], s[x | t]);
            break;
        }
    }
}

/// Runs `c` on a basis input; `observer`, if set, sees the state after each gate.
inline StateVector simulate(const Circuit& c, std::string_view basis_input,
                            const std::function<void(std::size_t, const Gate&, const StateVector&)>& observer = {}) {
    if (basis_input.size() != c.n_qubits())
        throw Error(ErrorKind::BadInput, "input has " + std::to_string(basis_input.size()) + " bits, circuit has " +
                                             std::to_string(c.n_qubits()) + " qubits");
    StateVector s = StateVector::basis(basis_input);
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        apply_gate(s, c.gates()[i]);
        if (observer) observer(i, c.gates()[i], s);
    }
    return s;
}

inline StateVector simulate(const Circuit& c, const StateVector& input) {
    if (input.n_qubits() != c.n_qubits()) throw Error(ErrorKind::BadInput, "state width does not match circuit");
    StateVector s = input;
    for (const auto& g : c.gates()) apply_gate(s, g);
    return s;
}

inline std::vector<std::size_t> qubit_range(std::size_t begin, std::size_t end) {
    std::vector<std::size_t> out;
    for (std::size_t q = begin; q < end; ++q) out.push_back(q);
    return out;
}

/// The circuit C_n on n+1 qubits: data qubits 0..n-1, target n. The
/// single-qubit gates sit on qubit n-1. `un_phase` substitutes w^k U_n for U_n.
inline Circuit build_cn(std::size_t n, std::int64_t un_phase = 0) {
    if (n < 1) throw Error(ErrorKind::Precondition, "C_n needs n >= 1");
    const std::size_t last = n - 1;
    const auto data = qubit_range(0, n);
    const auto nn = static_cast<std::int64_t>(n);
    Circuit c(n + 1);
    c.add(Gate::h(last))
        .add(Gate::un(data, un_phase))
        .add(Gate::gn(last, nn))
        .add(Gate::h(last))
        .add(Gate::cnot(last, n))
        .add(Gate::h(last))
        .add(Gate::gn_dag(last, nn))
        .add(Gate::un_dag(data, un_phase))
        .add(Gate::h(last));
    return c;
}

/// Hadamard on every qubit.
inline Circuit hadamard_layer(std::size_t n_qubits) {
    Circuit c(n_qubits);
    for (std::size_t q = 0; q < n_qubits; ++q) c.add(Gate::h(q));
    return c;
}

/// Outcome of an exhaustive basis-state comparison.
struct CircuitCheck {
    bool passed = true;
    std::size_t inputs_checked = 0;
    std::optional<std::string> counterexample;
};

/// Runs `c` on every basis input and compares against expected(x) times an
/// amplitude of exactly 1 (or any unit phase shared by all inputs when
/// `up_to_phase` is set).
inline CircuitCheck check_permutation(const Circuit& c, const std::function<std::size_t(std::size_t)>& expected,
                                      bool up_to_phase = false) {
    CircuitCheck out;
    const std::size_t n = c.n_qubits();
    const std::size_t dim = std::size_t{1} << n;
    std::optional<Amplitude> phase;
    StateVector probe(n);
    for (std::size_t x = 0; x < dim; ++x) {
        std::string bits = probe.bits_of(x);
        StateVector s = simulate(c, bits);
        const std::size_t y = expected(x);
        Amplitude amp = s[y];
        bool ok = true;
        for (std::size_t z = 0; z < dim && ok; ++z)
            if (z != y && !s[z].is_zero()) ok = false;
        if (ok) {
            if (!up_to_phase) ok = amp == Amplitude(1);
            else if (phase) ok = amp == *phase;
            else {
                ok = amp * amp.conj() == Amplitude(1);
                phase = amp;
            }
        }
        ++out.inputs_checked;
        if (!ok) {
            out.passed = false;
            out.counterexample = "|" + bits + "> expected |" + probe.bits_of(y) + ">";
            return out;
        }
    }
    return out;
}

/// C_n maps |x, t> to |x, t xor parity(x)> for every basis input.
inline CircuitCheck check_parity(std::size_t n, bool up_to_phase = false) {
    if (n < 1 || n > 12) throw Error(ErrorKind::TooLarge, "parity check supports 1 <= n <= 12");
    Circuit c = build_cn(n);
    return check_permutation(
        c, [n](std::size_t x) { return std::popcount(static_cast<std::uint64_t>(x >> 1)) % 2 ? x ^ 1U : x; },
        up_to_phase);
}

inline bool verify_parity(std::size_t n) { return check_parity(n).passed; }

/// H-conjugated C_n maps |x, c> to |x xor c..., c>.
inline CircuitCheck check_fanout(std::size_t n, bool up_to_phase = false) {
    if (n < 1 || n > 10) throw Error(ErrorKind::TooLarge, "fanout check supports 1 <= n <= 10");
    Circuit c = hadamard_layer(n + 1);
    c.append(build_cn(n)).append(hadamard_layer(n + 1));
    const std::size_t data_mask = ((std::size_t{1} << n) - 1) << 1;
    return check_permutation(
        c, [data_mask](std::size_t x) { return (x & 1U) ? x ^ data_mask : x; }, up_to_phase);
}

inline bool verify_fanout(std::size_t n) { return check_fanout(n).passed; }

struct UnIdentityReport {
    bool u4_identity = false;
    bool u2_odd_identity = false;
    bool cz_identity = false;
    bool un_from_two_parity = false;
};

namespace detail {

/// Every basis input |x> is mapped to phase(x)|x> exactly.
inline bool diagonal_matches(const Circuit& c, const std::function<Amplitude(std::size_t)>& phase,
                             const std::function<bool(std::size_t)>& include = {}) {
    const std::size_t dim = std::size_t{1} << c.n_qubits();
    StateVector probe(c.n_qubits());
    for (std::size_t x = 0; x < dim; ++x) {
        if (include && !include(x)) continue;
        StateVector s = simulate(c, probe.bits_of(x));
        for (std::size_t z = 0; z < dim; ++z) {
            if (z == x) {
                if (!(s[z] == phase(x))) return false;
            } else if (!s[z].is_zero()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace detail

/// Simulated checks of U_n^4 = I, U_n^2 = I for odd n, the controlled-Z
/// identity on two qubits, and U_n |x>|0> = P_n (G^{(x)n} (x) S) P_n |x>|0>
/// with G = S^{2-n}.
inline UnIdentityReport verify_un_identities(std::size_t n) {
    if (n < 1 || n > 10) throw Error(ErrorKind::TooLarge, "identity checks support 1 <= n <= 10");
    UnIdentityReport r;
    const auto data = qubit_range(0, n);
    const Amplitude one(1);

    Circuit u4(n);
    for (int i = 0; i < 4; ++i) u4.add(Gate::un(data));
    r.u4_identity = detail::diagonal_matches(u4, [&](std::size_t) { return one; });

    if (n % 2 == 0) {
        r.u2_odd_identity = true;
    } else {
        Circuit u2(n);
        u2.add(Gate::un(data)).add(Gate::un(data));
        r.u2_odd_identity = detail::diagonal_matches(u2, [&](std::size_t) { return one; });
    }

    auto cz = [](std::size_t x) { return x == 3 ? Amplitude(-1) : Amplitude(1); };
    Circuit left(2);
    left.add(Gate::un({0, 1})).add(Gate::sdg(0)).add(Gate::sdg(1));
    Circuit right(2);
    right.add(Gate::sdg(0)).add(Gate::sdg(1)).add(Gate::un({0, 1}));
    r.cz_identity = detail::diagonal_matches(left, cz) && detail::diagonal_matches(right, cz);

    Circuit two(n + 1);
    two.add(Gate::pn(data, n));
    for (auto q : data) two.add(Gate::s_pow(q, 2 - static_cast<std::int64_t>(n)));
    two.add(Gate::s(n)).add(Gate::pn(data, n));
    r.un_from_two_parity = detail::diagonal_matches(
        two,
        [n](std::size_t x) {
            auto w = static_cast<std::int64_t>(std::popcount(static_cast<std::uint64_t>(x >> 1)));
            return Amplitude::omega_power(2 * w * (static_cast<std::int64_t>(n) - w));
        },
        [](std::size_t x) { return (x & 1U) == 0; });
    return r;
}

}  // namespace fanout
