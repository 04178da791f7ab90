#pragma once

#include <string>
#include <vector>

#include "ccf/circline.hpp"

namespace ccf {

enum class Verdict : unsigned char { Out = 0, In = 1, NearBoundary = 2 };

// Finite union of cells; a cell is a finite intersection of circline half
// spaces. Closed under union, intersection, complement and Moebius maps.
// Every region used as a partition piece is the closure of its interior.
struct Region {
    struct Cell {
        std::vector<CirclineHalfSpace> halves;
        friend bool operator==(const Cell&, const Cell&) = default;
    };
    std::vector<Cell> cells;

    static Region everything() { return Region{{Cell{}}}; }
    static Region empty() { return Region{}; }
    static Region cell_of(std::vector<CirclineHalfSpace> halves);

    bool structurally_empty() const { return cells.empty(); }

    // Exact sign evaluation; NearBoundary wherever the magnitude of some
    // defining circline residual is below eps.
    Verdict contains(std::complex<double> z, double eps) const;
    Verdict contains_ext(const ExtendedComplex& z, double eps) const;

    Region united(const Region& other) const;
    Region intersected(const Region& other) const;
    Region complemented() const;
    Region transformed(const MobiusMap& m) const;
    Region conjugated() const;
    Region translated(const GaussianInt& a) const { return transformed(MobiusMap::translation(a)); }

    friend bool operator==(const Region&, const Region&) = default;
};

// Text serialization, decimal with 17 significant digits (round-trip exact).
std::string to_text(const Region& r);
Region region_from_text(const std::string& text);

}  // namespace ccf
