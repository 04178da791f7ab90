#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ccf/region.hpp"

namespace ccf::kernels {

// Region flattened into coefficient arrays for batch evaluation. Scalar and
// AVX2 backends evaluate the identical expression tree, so for the same
// inputs they produce bit-identical verdicts.
struct CompiledRegion {
    std::vector<double> A, Bx, By, C, side;                    // per half space
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;  // [begin, end) per cell

    static CompiledRegion compile(const Region& r);
};

enum class Backend { Scalar, Avx2 };

Backend active_backend();
void set_backend(Backend b);
bool avx2_supported();

// Writes one verdict byte per point: 0 = Out, 1 = In, 2 = NearBoundary.
void classify(const CompiledRegion& r, const double* xs, const double* ys, std::size_t n,
              double eps, std::uint8_t* out);

inline Verdict classify_one(const CompiledRegion& r, double x, double y, double eps) {
    std::uint8_t v;
    classify(r, &x, &y, 1, eps, &v);
    return static_cast<Verdict>(v);
}

// Backend entry points (dispatch targets; exposed for equivalence tests).
void classify_scalar(const CompiledRegion& r, const double* xs, const double* ys, std::size_t n,
                     double eps, std::uint8_t* out);
void classify_avx2(const CompiledRegion& r, const double* xs, const double* ys, std::size_t n,
                   double eps, std::uint8_t* out);

}  // namespace ccf::kernels
