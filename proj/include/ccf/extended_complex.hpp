#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ccf/gaussian_int.hpp"

namespace ccf {

// A point of the Riemann sphere: either a finite complex value or the point
// at infinity. Arithmetic follows the projective convention (1/0 = inf).
struct ExtendedComplex {
    std::complex<double> value{0.0, 0.0};
    bool infinite = false;

    ExtendedComplex() = default;
    explicit ExtendedComplex(std::complex<double> v) : value(v) {}
    explicit ExtendedComplex(double re, double im) : value(re, im) {}

    static ExtendedComplex infinity() {
        ExtendedComplex e;
        e.infinite = true;
        return e;
    }
    bool is_finite() const { return !infinite; }

    friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.value == b.value;
    }
};

// Moebius map z -> (p z + q) / (r z + s) with Gaussian integer entries.
// Compositions used in this project (S, T^a, rotations and short products of
// them) keep all entries tiny, so int64 never overflows.
struct MobiusMap {
    GaussianInt p{1, 0}, q{0, 0}, r{0, 0}, s{1, 0};

    GaussianInt determinant() const { return p * s - q * r; }

    static MobiusMap identity() { return {}; }
    // S(z) = -1/z
    static MobiusMap inversion() { return {{0, 0}, {-1, 0}, {1, 0}, {0, 0}}; }
    // T^a(z) = z + a
    static MobiusMap translation(const GaussianInt& a) { return {{1, 0}, a, {0, 0}, {1, 0}}; }
    // z -> u z for a unit u in {1, i, -1, -i}
    static MobiusMap rotation(const GaussianInt& u) { return {u, {0, 0}, {0, 0}, {1, 0}}; }

    // Composition: (m1 * m2)(z) = m1(m2(z)).
    friend MobiusMap operator*(const MobiusMap& a, const MobiusMap& b) {
        return {a.p * b.p + a.q * b.r, a.p * b.q + a.q * b.s,
                a.r * b.p + a.s * b.r, a.r * b.q + a.s * b.s};
    }

    // Adjugate acts as the inverse map on the sphere (the determinant only
    // rescales homogeneous coordinates).
    MobiusMap adjugate() const { return {s, -q, -r, p}; }
};

inline ExtendedComplex mobius_apply(const MobiusMap& m, const ExtendedComplex& z) {
    if (m.determinant().is_zero()) throw std::invalid_argument("mobius_apply: singular map");
    const auto p = to_complex(m.p), q = to_complex(m.q), r = to_complex(m.r), s = to_complex(m.s);
    if (z.infinite) {
        if (m.r.is_zero()) return ExtendedComplex::infinity();
        return ExtendedComplex(p / r);
    }
    const std::complex<double> num = p * z.value + q;
    const std::complex<double> den = r * z.value + s;
    if (den == std::complex<double>(0.0, 0.0)) return ExtendedComplex::infinity();
    return ExtendedComplex(num / den);
}

// S(z) = -1/z on the sphere; S(0) = inf, S(inf) = 0.
inline ExtendedComplex sphere_inversion(const ExtendedComplex& z) {
    if (z.infinite) return ExtendedComplex(0.0, 0.0);
    if (z.value == std::complex<double>(0.0, 0.0)) return ExtendedComplex::infinity();
    return ExtendedComplex(-1.0 / z.value);
}

inline std::complex<double> sphere_inversion(std::complex<double> z) { return -1.0 / z; }

}  // namespace ccf
