#include "ccf/circline.hpp"

#include <cmath>
#include <stdexcept>

namespace ccf {

void CirclineHalfSpace::normalize() {
    if (A != 0.0) {
        const double inv = 1.0 / A;
        if (A < 0.0) side = -side;
        B *= inv;
        C *= inv;
        A = 1.0;
    } else {
        const double m = std::abs(B);
        if (m == 0.0) throw std::invalid_argument("circline: A and B both zero");
        const double inv = 0.5 / m;
        B *= inv;
        C *= inv;
    }
}

CirclineHalfSpace CirclineHalfSpace::transformed(const MobiusMap& m) const {
    // With H = [[A, B], [conj(B), C]], the image of {side * z^H H z <= 0}
    // under z -> m(z) is {side * w^H (N^H H N) w <= 0} for N = adj(m): the
    // homogeneous coordinates of the preimage are N w up to a scalar, and the
    // scalar contributes only a positive factor |lambda|^2.
    const auto n11 = to_complex(m.s), n12 = to_complex(-m.q);
    const auto n21 = to_complex(-m.r), n22 = to_complex(m.p);

    const auto col1_top = A * n11 + B * n21;
    const auto col1_bot = std::conj(B) * n11 + C * n21;
    const auto col2_top = A * n12 + B * n22;
    const auto col2_bot = std::conj(B) * n12 + C * n22;

    CirclineHalfSpace out;
    out.A = (std::conj(n11) * col1_top + std::conj(n21) * col1_bot).real();
    out.B = std::conj(n11) * col2_top + std::conj(n21) * col2_bot;
    out.C = (std::conj(n12) * col2_top + std::conj(n22) * col2_bot).real();
    out.side = side;
    out.normalize();
    return out;
}

CirclineHalfSpace disk_inside(std::complex<double> center, double radius) {
    CirclineHalfSpace h{1.0, -center, std::norm(center) - radius * radius, +1};
    h.normalize();
    return h;
}

CirclineHalfSpace disk_outside(std::complex<double> center, double radius) {
    CirclineHalfSpace h = disk_inside(center, radius);
    h.side = -1;
    return h;
}

CirclineHalfSpace half_plane(std::complex<double> normal, double offset) {
    CirclineHalfSpace h{0.0, 0.5 * normal, -offset, +1};
    h.normalize();
    return h;
}

}  // namespace ccf
