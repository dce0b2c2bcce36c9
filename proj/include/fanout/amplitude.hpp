#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

#include "fanout/rational.hpp"

namespace fanout {

/// (a + b w + c w^2 + d w^3) / sqrt(2)^k with w = e^{i pi/4}, so w^4 = -1.
///
/// Kept in lowest terms: k is decreased while the numerator stays divisible
/// by sqrt(2) = w - w^3. Equal values therefore have equal representations.
class Amplitude {
public:
    Amplitude() = default;
    Amplitude(long long a) : coeffs_{BigInt(a), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    Amplitude(std::array<BigInt, 4> coeffs, std::int64_t half_powers)
        : coeffs_(std::move(coeffs)), k_(half_powers) {
        if (k_ < 0) {
            // Multiply through by sqrt(2)^{-k}.
            while (k_ < 0) {
                mul_sqrt2_raw();
                ++k_;
            }
        }
        normalize();
    }

    /// w^j for any integer j.
    static Amplitude omega_power(std::int64_t j) {
        Amplitude r(1);
        r.rotate(j);
        return r;
    }

    const std::array<BigInt, 4>& coeffs() const noexcept { return coeffs_; }
    std::int64_t half_powers() const noexcept { return k_; }

    bool is_zero() const noexcept {
        return coeffs_[0] == 0 && coeffs_[1] == 0 && coeffs_[2] == 0 && coeffs_[3] == 0;
    }

    /// Multiplies in place by w^j.
    Amplitude& rotate(std::int64_t j) {
        int r = static_cast<int>(((j % 8) + 8) % 8);
        for (int s = 0; s < r; ++s) {
            BigInt top = std::move(coeffs_[3]);
            coeffs_[3] = std::move(coeffs_[2]);
            coeffs_[2] = std::move(coeffs_[1]);
            coeffs_[1] = std::move(coeffs_[0]);
            coeffs_[0] = -top;
        }
        return *this;
    }

    /// Divides in place by sqrt(2).
    Amplitude& div_sqrt2() {
        if (is_zero()) return *this;
        ++k_;
        normalize();
        return *this;
    }

    Amplitude conj() const {
        Amplitude r;
        r.coeffs_ = {coeffs_[0], -coeffs_[3], -coeffs_[2], -coeffs_[1]};
        r.k_ = k_;
        return r;
    }

    Amplitude operator-() const {
        Amplitude r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Amplitude& operator+=(const Amplitude& o) { return add(o, 1); }
    Amplitude& operator-=(const Amplitude& o) { return add(o, -1); }

    Amplitude& operator*=(const Amplitude& o) {
        std::array<BigInt, 4> out{0, 0, 0, 0};
        for (int i = 0; i < 4; ++i) {
            if (coeffs_[i] == 0) continue;
            for (int j = 0; j < 4; ++j) {
                if (o.coeffs_[j] == 0) continue;
                BigInt term = coeffs_[i] * o.coeffs_[j];
                int e = i + j;
                if (e >= 4) out[e - 4] -= term;
                else out[e] += term;
            }
        }
        coeffs_ = std::move(out);
        k_ += o.k_;
        normalize();
        return *this;
    }

    friend Amplitude operator+(Amplitude a, const Amplitude& b) { return a += b; }
    friend Amplitude operator-(Amplitude a, const Amplitude& b) { return a -= b; }
    friend Amplitude operator*(Amplitude a, const Amplitude& b) { return a *= b; }

    friend bool operator==(const Amplitude& a, const Amplitude& b) {
        return a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
    }

    std::complex<double> to_complex() const {
        const double h = std::sqrt(0.5);
        std::complex<double> w(h, h);
        std::complex<double> acc = coeffs_[0].convert_to<double>();
        std::complex<double> p = w;
        for (int i = 1; i < 4; ++i) {
            acc += coeffs_[i].convert_to<double>() * p;
            p *= w;
        }
        return acc * std::pow(h, static_cast<double>(k_));
    }

    std::string to_string() const {
        std::string s = "(" + coeffs_[0].str() + "," + coeffs_[1].str() + "," + coeffs_[2].str() + "," +
                        coeffs_[3].str() + ")";
        if (k_ != 0) s += "/sqrt2^" + std::to_string(k_);
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Amplitude& a) { return os << a.to_string(); }

private:
    // x * (w - w^3) = (b - d) + (a + c) w + (b + d) w^2 + (c - a) w^3
    void mul_sqrt2_raw() {
        auto& [a, b, c, d] = coeffs_;
        BigInt bd = b - d;
        BigInt ac = a + c;
        BigInt bsum = b + d;
        BigInt ca = c - a;
        coeffs_ = {bd, ac, bsum, ca};
    }

    Amplitude& add(const Amplitude& o, int sign) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = sign > 0 ? o : -o;
            return *this;
        }
        Amplitude other = o;
        while (k_ < other.k_) {
            mul_sqrt2_raw();
            ++k_;
        }
        while (other.k_ < k_) {
            other.mul_sqrt2_raw();
            ++other.k_;
        }
        for (int i = 0; i < 4; ++i) {
            if (sign > 0) coeffs_[i] += other.coeffs_[i];
            else coeffs_[i] -= other.coeffs_[i];
        }
        normalize();
        return *this;
    }

    void normalize() {
        if (is_zero()) {
            k_ = 0;
            return;
        }
        while (k_ > 0) {
            auto& [a, b, c, d] = coeffs_;
            bool ac_same = boost::multiprecision::bit_test(a, 0) == boost::multiprecision::bit_test(c, 0);
            bool bd_same = boost::multiprecision::bit_test(b, 0) == boost::multiprecision::bit_test(d, 0);
            if (!ac_same || !bd_same) break;
            // x / sqrt(2) = x (w - w^3) / 2
            mul_sqrt2_raw();
            for (auto& v : coeffs_) v /= 2;
            --k_;
        }
    }

    std::array<BigInt, 4> coeffs_{0, 0, 0, 0};
    std::int64_t k_ = 0;
};

}  // namespace fanout
