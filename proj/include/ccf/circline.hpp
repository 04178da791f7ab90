#pragma once

#include <complex>

#include "ccf/extended_complex.hpp"

namespace ccf {

// One side of a circline (circle or straight line). The set is
//   { z : side * f(z) <= 0 },   f(z) = A|z|^2 + 2 Re(conj(B) z) + C.
// A == 0 gives a half-plane, A != 0 the inside (side=+1 with A=1) or outside
// of a circle. Normalized so that A == 1, or A == 0 and |B| == 1/2; with that
// scaling |f| approximates geometric distance to the boundary near it.
struct CirclineHalfSpace {
    double A = 0.0;
    std::complex<double> B{0.0, 0.0};
    double C = 0.0;
    int side = +1;

    double residual(double x, double y) const {
        return A * (x * x + y * y) + 2.0 * (B.real() * x + B.imag() * y) + C;
    }
    double residual(std::complex<double> z) const { return residual(z.real(), z.imag()); }

    // Sign of f at the point at infinity: the sign of A for circles; lines
    // pass through infinity (residual 0).
    double residual_at_infinity() const { return A; }

    void normalize();

    // Image under the Moebius map m: Hermitian congruence by the adjugate of
    // m, which preserves the side. Exact apart from float rounding.
    CirclineHalfSpace transformed(const MobiusMap& m) const;
    CirclineHalfSpace conjugated() const { return {A, std::conj(B), C, side}; }
    CirclineHalfSpace complemented() const { return {A, B, C, -side}; }

    friend bool operator==(const CirclineHalfSpace&, const CirclineHalfSpace&) = default;
};

// Constructors for the geometry used throughout: all fundamental sets and
// partition pieces are intersections of these.
CirclineHalfSpace disk_inside(std::complex<double> center, double radius);
CirclineHalfSpace disk_outside(std::complex<double> center, double radius);
// { z : Re(conj(normal) z) <= offset }; normal need not be unit length.
CirclineHalfSpace half_plane(std::complex<double> normal, double offset);

}  // namespace ccf
