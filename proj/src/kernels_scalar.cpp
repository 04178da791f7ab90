#include <cmath>

#include "ccf/kernels.hpp"

namespace ccf::kernels {

CompiledRegion CompiledRegion::compile(const Region& r) {
    CompiledRegion c;
    for (const Region::Cell& cell : r.cells) {
        const std::uint32_t begin = static_cast<std::uint32_t>(c.A.size());
        for (const CirclineHalfSpace& h : cell.halves) {
            c.A.push_back(h.A);
            c.Bx.push_back(h.B.real());
            c.By.push_back(h.B.imag());
            c.C.push_back(h.C);
            c.side.push_back(static_cast<double>(h.side));
        }
        c.cells.emplace_back(begin, static_cast<std::uint32_t>(c.A.size()));
    }
    return c;
}

void classify_scalar(const CompiledRegion& r, const double* xs, const double* ys, std::size_t n,
                     double eps, std::uint8_t* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double x = xs[i];
        const double y = ys[i];
        const double r2 = x * x + y * y;
        bool in = false;
        bool near = false;
        for (const auto& [begin, end] : r.cells) {
            bool cell_in = true;
            for (std::uint32_t k = begin; k < end; ++k) {
                const double f = r.A[k] * r2 + 2.0 * (r.Bx[k] * x + r.By[k] * y) + r.C[k];
                if (std::abs(f) < eps) near = true;
                if (f * r.side[k] > 0.0) cell_in = false;
            }
            if (cell_in) in = true;
        }
        out[i] = near ? 2 : (in ? 1 : 0);
    }
}

}  // namespace ccf::kernels
