#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ccf/region.hpp"

namespace ccf {

struct RejectionBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BBox {
    double xmin = -6.0, xmax = 6.0, ymin = -6.0, ymax = 6.0;
    static BBox square(double half) { return {-half, half, -half, half}; }
};

// Deterministic counter-based stream: sample index -> uniforms. Reports are
// independent of worker count because every sample depends only on
// (seed, index).
struct RandomStream {
    std::uint64_t seed;
    explicit RandomStream(std::uint64_t s) : seed(s) {}
    std::uint64_t bits(std::uint64_t index, std::uint64_t lane) const;
    double uniform(std::uint64_t index, std::uint64_t lane) const;  // [0, 1)
    std::complex<double> point_in(const BBox& b, std::uint64_t index) const;
};

// Outcome of a sampled almost-everywhere comparison of two sets.
struct ComparisonReport {
    std::uint64_t samples_total = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t near_boundary_excluded = 0;
    bool pass = false;  // pass iff mismatches == 0
    std::uint64_t seed = 0;
    std::vector<std::complex<double>> witnesses;  // first few mismatch points
};

using MembershipFn = std::function<Verdict(std::complex<double>)>;

// Samples n points in bbox; points NearBoundary for either set are excluded;
// a mismatch is a point In one set and Out of the other.
ComparisonReport ae_equal(const Region& a, const Region& b, const BBox& bbox, std::uint64_t n,
                          double eps, std::uint64_t seed);
ComparisonReport ae_compare(const MembershipFn& a, const MembershipFn& b, const BBox& bbox,
                            std::uint64_t n, double eps, std::uint64_t seed);

// n points uniform on r intersected with bbox, by rejection; deterministic
// for a fixed seed. Throws RejectionBudgetExceeded if the acceptance rate
// drops below 1e-4. Accepts only points with verdict In at eps, so a larger
// eps yields interior points with a residual margin.
std::vector<std::complex<double>> sample_region(const Region& r, const BBox& bbox, std::size_t n,
                                                std::uint64_t seed, double eps = 1e-12);

struct BuildableParams {
    std::size_t probe_points = 512;   // interior samples per piece
    std::uint64_t compare_samples = 200000;
    double eps = 1e-9;
    double probe_margin = 1e-7;
    std::uint64_t seed = 0;
    BBox bbox = BBox::square(1.05);
};

// Greedily selects the pieces whose sampled interiors lie inside the target,
// then decides by ae_equal(target, union of selected). Returns the selected
// indices on pass.
std::optional<std::vector<std::size_t>> buildable_from(const Region& target,
                                                       const std::vector<Region>& pieces,
                                                       const BuildableParams& params = {});

}  // namespace ccf
