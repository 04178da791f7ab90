#include "ccf/region.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ccf {

Region Region::cell_of(std::vector<CirclineHalfSpace> halves) {
    Region r;
    r.cells.push_back(Cell{std::move(halves)});
    return r;
}

Verdict Region::contains(std::complex<double> z, double eps) const {
    const double x = z.real(), y = z.imag();
    bool in = false;
    bool near = false;
    for (const Cell& c : cells) {
        bool cell_in = true;
        for (const CirclineHalfSpace& h : c.halves) {
            const double f = h.residual(x, y);
            if (std::abs(f) < eps) near = true;
            if (f * static_cast<double>(h.side) > 0.0) cell_in = false;
        }
        if (cell_in) in = true;
    }
    if (near) return Verdict::NearBoundary;
    return in ? Verdict::In : Verdict::Out;
}

Verdict Region::contains_ext(const ExtendedComplex& z, double eps) const {
    if (z.is_finite()) return contains(z.value, eps);
    // At infinity the residual of a circle has the sign of A; lines pass
    // through infinity.
    bool in = false;
    bool near = false;
    for (const Cell& c : cells) {
        bool cell_in = true;
        for (const CirclineHalfSpace& h : c.halves) {
            const double f = h.residual_at_infinity();
            if (f == 0.0) near = true;
            if (f * static_cast<double>(h.side) > 0.0) cell_in = false;
        }
        if (cell_in) in = true;
    }
    if (near) return Verdict::NearBoundary;
    return in ? Verdict::In : Verdict::Out;
}

Region Region::united(const Region& other) const {
    Region r = *this;
    r.cells.insert(r.cells.end(), other.cells.begin(), other.cells.end());
    return r;
}

namespace {

// Cell cleanup: drop duplicated half spaces; detect cells whose interior is
// structurally empty because a circline appears with both sides.
bool simplify_cell(Region::Cell& c) {
    std::vector<CirclineHalfSpace> out;
    for (const CirclineHalfSpace& h : c.halves) {
        bool dup = false;
        for (const CirclineHalfSpace& g : out) {
            if (g == h) {
                dup = true;
                break;
            }
            if (g.A == h.A && g.B == h.B && g.C == h.C && g.side == -h.side) return false;
        }
        if (!dup) out.push_back(h);
    }
    c.halves = std::move(out);
    return true;
}

}  // namespace

Region Region::intersected(const Region& other) const {
    Region r;
    for (const Cell& a : cells)
        for (const Cell& b : other.cells) {
            Cell c = a;
            c.halves.insert(c.halves.end(), b.halves.begin(), b.halves.end());
            if (simplify_cell(c)) r.cells.push_back(std::move(c));
        }
    return r;
}

Region Region::complemented() const {
    // De Morgan: complement of a union of cells is the intersection of the
    // cell complements, each of which is a union of flipped half spaces.
    Region acc = Region::everything();
    for (const Cell& c : cells) {
        Region cc;
        for (const CirclineHalfSpace& h : c.halves) cc.cells.push_back(Cell{{h.complemented()}});
        acc = acc.intersected(cc);
    }
    return acc;
}

Region Region::transformed(const MobiusMap& m) const {
    Region r;
    r.cells.reserve(cells.size());
    for (const Cell& c : cells) {
        Cell nc;
        nc.halves.reserve(c.halves.size());
        for (const CirclineHalfSpace& h : c.halves) nc.halves.push_back(h.transformed(m));
        r.cells.push_back(std::move(nc));
    }
    return r;
}

Region Region::conjugated() const {
    Region r;
    r.cells.reserve(cells.size());
    for (const Cell& c : cells) {
        Cell nc;
        nc.halves.reserve(c.halves.size());
        for (const CirclineHalfSpace& h : c.halves) nc.halves.push_back(h.conjugated());
        r.cells.push_back(std::move(nc));
    }
    return r;
}

std::string to_text(const Region& r) {
    std::string out = "region cells=" + std::to_string(r.cells.size()) + "\n";
    char buf[160];
    for (const Region::Cell& c : r.cells) {
        out += "cell hs=" + std::to_string(c.halves.size()) + "\n";
        for (const CirclineHalfSpace& h : c.halves) {
            std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %d\n", h.A, h.B.real(),
                          h.B.imag(), h.C, h.side);
            out += buf;
        }
    }
    return out;
}

Region region_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    std::size_t ncells = 0;
    if (!(is >> tag) || tag != "region") throw std::invalid_argument("region text: bad header");
    if (!(is >> tag) || tag.rfind("cells=", 0) != 0)
        throw std::invalid_argument("region text: missing cell count");
    ncells = std::stoul(tag.substr(6));
    Region r;
    for (std::size_t i = 0; i < ncells; ++i) {
        if (!(is >> tag) || tag != "cell") throw std::invalid_argument("region text: bad cell");
        if (!(is >> tag) || tag.rfind("hs=", 0) != 0)
            throw std::invalid_argument("region text: missing half-space count");
        const std::size_t nh = std::stoul(tag.substr(3));
        Region::Cell c;
        for (std::size_t k = 0; k < nh; ++k) {
            CirclineHalfSpace h;
            double bre = 0, bim = 0;
            if (!(is >> h.A >> bre >> bim >> h.C >> h.side))
                throw std::invalid_argument("region text: bad half-space row");
            h.B = {bre, bim};
            c.halves.push_back(h);
        }
        r.cells.push_back(std::move(c));
    }
    return r;
}

}  // namespace ccf
