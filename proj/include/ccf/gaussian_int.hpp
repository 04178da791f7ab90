#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace ccf {

enum class Parity { Even, Odd };

// Gaussian integer a = re + im*i, the digit alphabet of every algorithm here.
template <class Int>
struct BasicGaussian {
    Int re{};
    Int im{};

    constexpr BasicGaussian() = default;
    constexpr BasicGaussian(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    friend constexpr BasicGaussian operator+(const BasicGaussian& a, const BasicGaussian& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend constexpr BasicGaussian operator-(const BasicGaussian& a, const BasicGaussian& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend constexpr BasicGaussian operator*(const BasicGaussian& a, const BasicGaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    constexpr BasicGaussian operator-() const { return {-re, -im}; }
    constexpr BasicGaussian conj() const { return {re, -im}; }
    constexpr Int norm() const { return re * re + im * im; }  // |a|^2, exact
    constexpr bool is_zero() const { return re == 0 && im == 0; }

    friend constexpr bool operator==(const BasicGaussian&, const BasicGaussian&) = default;
};

using GaussianInt = BasicGaussian<std::int64_t>;

constexpr Parity parity(const GaussianInt& a) {
    return ((a.re + a.im) % 2) == 0 ? Parity::Even : Parity::Odd;
}
constexpr bool is_even(const GaussianInt& a) { return parity(a) == Parity::Even; }
constexpr bool is_odd(const GaussianInt& a) { return parity(a) == Parity::Odd; }

// Multiplication by i^k, k mod 4.
constexpr GaussianInt unit_pow_i(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

inline std::complex<double> to_complex(const GaussianInt& a) {
    return {static_cast<double>(a.re), static_cast<double>(a.im)};
}

inline double abs(const GaussianInt& a) { return std::sqrt(static_cast<double>(a.norm())); }

// Lexicographic order on (re, im); used only for deterministic tie-breaking.
constexpr bool lex_less(const GaussianInt& a, const GaussianInt& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

inline std::string to_string(const GaussianInt& a) {
    std::string s = std::to_string(a.re);
    if (a.im >= 0) s += "+";
    s += std::to_string(a.im) + "i";
    return s;
}

struct GaussianIntHash {
    std::size_t operator()(const GaussianInt& a) const {
        std::uint64_t x = static_cast<std::uint64_t>(a.re) * 0x9e3779b97f4a7c15ULL;
        x ^= static_cast<std::uint64_t>(a.im) + 0x7f4a7c15ULL + (x << 6) + (x >> 2);
        return static_cast<std::size_t>(x);
    }
};

}  // namespace ccf
