#include "ccf/algorithms.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace ccf {

std::string algorithm_name(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::NearestInteger: return "nearest-integer";
        case AlgorithmId::NearestEven: return "nearest-even";
        case AlgorithmId::NearestOdd: return "nearest-odd";
        case AlgorithmId::Diamond: return "diamond";
        case AlgorithmId::Disk: return "disk";
        case AlgorithmId::ShiftedHurwitz: return "shifted-hurwitz";
    }
    return "?";
}

std::optional<AlgorithmId> parse_algorithm(const std::string& name) {
    for (AlgorithmId id : kAllAlgorithms)
        if (algorithm_name(id) == name) return id;
    return std::nullopt;
}

namespace {

const MobiusMap kRotNegI = MobiusMap::rotation({0, -1});  // z -> -i z

Region square_k() {
    return Region::cell_of({half_plane({1, 0}, 0.5), half_plane({-1, 0}, 0.5),
                            half_plane({0, 1}, 0.5), half_plane({0, -1}, 0.5)});
}

Region diamond_k() {
    return Region::cell_of({half_plane({1, 1}, 1.0), half_plane({-1, 1}, 1.0),
                            half_plane({1, -1}, 1.0), half_plane({-1, -1}, 1.0)});
}

Region disk_k() { return Region::cell_of({disk_inside({0, 0}, 1.0)}); }

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Outer boundary of the shifted-square fundamental set: the strip
// |Im z| <= 1/2 clipped between |z| <= 1 and |z - 1| >= 1.
std::vector<CirclineHalfSpace> shifted_hurwitz_outer() {
    return {half_plane({0, 1}, 0.5), half_plane({0, -1}, 0.5), disk_inside({0, 0}, 1.0),
            disk_outside({1, 0}, 1.0)};
}

int algorithm_index(AlgorithmId alg) { return static_cast<int>(alg); }

std::vector<Region> build_partition(AlgorithmId alg) {
    std::vector<Region> p;
    switch (alg) {
        case AlgorithmId::NearestInteger: {
            const Region K = square_k();
            const Region b1 = K.intersected(Region::cell_of(
                {half_plane({1, 0}, 0.0), disk_outside({0, 1}, 1.0), disk_outside({0, -1}, 1.0)}));
            const Region b2 = K.intersected(Region::cell_of(
                {disk_inside({0, 1}, 1.0), disk_inside({-1, 0}, 1.0), disk_outside({-1, 1}, 1.0)}));
            const Region b3 = K.intersected(Region::cell_of({disk_inside({-1, 1}, 1.0)}));
            p = {b1, b2, b3};
            for (int i = 3; i < 12; ++i) p.push_back(p[i - 3].transformed(kRotNegI));
            break;
        }
        case AlgorithmId::NearestEven: {
            const Region K = diamond_k();
            const Region b1 = K.intersected(Region::cell_of(
                {disk_inside({-0.5, 0.5}, kInvSqrt2), disk_inside({-0.5, -0.5}, kInvSqrt2)}));
            const Region b2 = K.intersected(Region::cell_of(
                {disk_inside({-0.5, 0.5}, kInvSqrt2), disk_outside({-0.5, -0.5}, kInvSqrt2),
                 disk_outside({0.5, 0.5}, kInvSqrt2)}));
            p = {b1, b2};
            for (int i = 2; i < 8; ++i) p.push_back(p[i - 2].transformed(kRotNegI));
            break;
        }
        case AlgorithmId::NearestOdd:
        case AlgorithmId::Diamond: {
            const Region K = diamond_k();
            const Region b1 = K.intersected(Region::cell_of(
                {disk_inside({-0.5, -0.5}, kInvSqrt2), disk_inside({-0.5, 0.5}, kInvSqrt2)}));
            const Region b2 = K.intersected(Region::cell_of(
                {disk_outside({-0.5, -0.5}, kInvSqrt2), half_plane({0, -1}, 0.0),
                 half_plane({1, 1}, 0.0)}));
            const Region b3 = K.intersected(Region::cell_of(
                {disk_outside({0.5, 0.5}, kInvSqrt2), half_plane({-1, -1}, 0.0),
                 half_plane({1, 0}, 0.0)}));
            p = {b1, b2, b3};
            for (int i = 3; i < 12; ++i) p.push_back(p[i - 3].transformed(kRotNegI));
            break;
        }
        case AlgorithmId::Disk: {
            const Region D = disk_k();
            const Region k2 = D.intersected(Region::cell_of({disk_inside({-1, 1}, 1.0)}));
            const Region k3 = k2.transformed(kRotNegI);
            const Region k4 = k3.transformed(kRotNegI);
            const Region k5 = k4.transformed(kRotNegI);
            const Region k1 = D.intersected(Region::cell_of(
                {disk_outside({-1, 1}, 1.0), disk_outside({1, 1}, 1.0), disk_outside({1, -1}, 1.0),
                 disk_outside({-1, -1}, 1.0)}));
            p = {k1, k2, k3, k4, k5};
            break;
        }
        case AlgorithmId::ShiftedHurwitz: {
            const auto outer = shifted_hurwitz_outer();
            auto piece = [&outer](std::vector<CirclineHalfSpace> extra) {
                Region::Cell c{outer};
                c.halves.insert(c.halves.end(), extra.begin(), extra.end());
                Region r;
                r.cells.push_back(std::move(c));
                return r;
            };
            const Region k1 = piece({half_plane({-1, 0}, 0.5), half_plane({1, 0}, 0.0),
                                     disk_outside({0, 1}, 1.0), disk_outside({0, -1}, 1.0)});
            const Region k2 = piece({disk_inside({0, 1}, 1.0), disk_inside({-1, 0}, 1.0),
                                     disk_outside({-1, 1}, 1.0)});
            const Region k3 = piece({half_plane({0, -1}, 0.0), half_plane({0, 1}, 0.5),
                                     disk_outside({1, 0}, 1.0), disk_outside({-1, 0}, 1.0)});
            const Region k4 = piece({half_plane({-1, 0}, 0.5), disk_inside({-1, 1}, 1.0)});
            const Region k5 = piece({half_plane({1, 0}, -0.5), disk_inside({-1, 1}, 1.0)});
            const Region k6 = piece({half_plane({1, 0}, -0.5), disk_outside({-1, 1}, 1.0),
                                     disk_outside({-1, -1}, 1.0)});
            p = {k1, k2, k3, k4, k5, k6};
            for (int i = 6; i < 10; ++i) p.push_back(p[i - 5].conjugated());
            break;
        }
    }
    return p;
}

Region build_fundamental_set(AlgorithmId alg) {
    switch (alg) {
        case AlgorithmId::NearestInteger: return square_k();
        case AlgorithmId::NearestEven:
        case AlgorithmId::NearestOdd:
        case AlgorithmId::Diamond: return diamond_k();
        case AlgorithmId::Disk: return disk_k();
        case AlgorithmId::ShiftedHurwitz: {
            Region u = Region::empty();
            for (const Region& piece : partition(AlgorithmId::ShiftedHurwitz)) u = u.united(piece);
            return u;
        }
    }
    return Region::empty();
}

}  // namespace

const std::vector<Region>& partition(AlgorithmId alg) {
    static const std::array<std::vector<Region>, 6> tables = [] {
        std::array<std::vector<Region>, 6> t;
        for (AlgorithmId id : kAllAlgorithms) t[algorithm_index(id)] = build_partition(id);
        return t;
    }();
    return tables[algorithm_index(alg)];
}

const Region& fundamental_set(AlgorithmId alg) {
    static const std::array<Region, 6> tables = [] {
        std::array<Region, 6> t;
        for (AlgorithmId id : kAllAlgorithms) t[algorithm_index(id)] = build_fundamental_set(id);
        return t;
    }();
    return tables[algorithm_index(alg)];
}

bool digit_admissible(AlgorithmId alg, const GaussianInt& a) {
    switch (alg) {
        case AlgorithmId::NearestEven:
        case AlgorithmId::Disk: return is_even(a);
        case AlgorithmId::NearestOdd: return is_odd(a);
        default: return true;
    }
}

namespace {

GaussianInt choose_nearest_integer(std::complex<double> z) {
    return {static_cast<std::int64_t>(std::floor(z.real() + 0.5)),
            static_cast<std::int64_t>(std::floor(z.imag() + 0.5))};
}

GaussianInt choose_nearest_even(std::complex<double> z) {
    const double u = std::floor((z.real() + z.imag() + 1.0) / 2.0);
    const double v = std::floor((z.real() - z.imag() + 1.0) / 2.0);
    return {static_cast<std::int64_t>(u + v), static_cast<std::int64_t>(u - v)};
}

// Visits the 16 lattice points around z; covers every point within distance 1.
template <class Fn>
void for_lattice_window(std::complex<double> z, const Fn& fn) {
    const std::int64_t x0 = static_cast<std::int64_t>(std::floor(z.real()));
    const std::int64_t y0 = static_cast<std::int64_t>(std::floor(z.imag()));
    for (std::int64_t x = x0 - 1; x <= x0 + 2; ++x)
        for (std::int64_t y = y0 - 1; y <= y0 + 2; ++y) fn(GaussianInt{x, y});
}

GaussianInt choose_nearest_odd(std::complex<double> z) {
    GaussianInt best{1, 0};
    double best_d = 1e300;
    for_lattice_window(z, [&](const GaussianInt& c) {
        if (!is_odd(c)) return;
        const double d = std::abs(z - to_complex(c));
        // Ties go to the lexicographically largest (re, im).
        if (d < best_d - 1e-12 || (d < best_d + 1e-12 && lex_less(best, c))) {
            best = c;
            best_d = d;
        }
    });
    return best;
}

GaussianInt choose_shifted_hurwitz(std::complex<double> z) {
    constexpr double d_shift = -0.5;
    GaussianInt best{0, 0};
    double best_obj = 1e300;
    bool found = false;
    for_lattice_window(z, [&](const GaussianInt& h) {
        if (std::abs(z - to_complex(h)) > 1.0 + 1e-12) return;
        const double obj = std::abs(z - to_complex(h) - d_shift);
        // Ties go to the lexicographically smallest (re, im).
        if (!found || obj < best_obj - 1e-12 || (obj < best_obj + 1e-12 && lex_less(h, best))) {
            best = h;
            best_obj = obj;
            found = true;
        }
    });
    return best;
}

bool in_disk_v(int j, std::complex<double> w);

GaussianInt choose_disk(std::complex<double> w) {
    // The even a with w in a + V(a); candidates scanned by distance.
    GaussianInt cands[10];
    int n = 0;
    for_lattice_window(w, [&](const GaussianInt& a) {
        if (is_even(a) && std::abs(w - to_complex(a)) <= 1.0 + 1e-12 && n < 10) cands[n++] = a;
    });
    std::sort(cands, cands + n, [&](const GaussianInt& a, const GaussianInt& b) {
        const double da = std::abs(w - to_complex(a)), db = std::abs(w - to_complex(b));
        if (da != db) return da < db;
        return lex_less(a, b);
    });
    for (int k = 0; k < n; ++k)
        if (in_disk_v(disk_sector(cands[k]), w - to_complex(cands[k]))) return cands[k];
    // The closed translates a + V(a) cover the plane; reaching this point
    // means w sits on a seam between them.
    return n > 0 ? cands[0] : GaussianInt{0, 0};
}

}  // namespace

std::complex<double> t_map(std::complex<double> z) {
    if (z == std::complex<double>(0.0, 0.0)) return z;
    const double a = std::arg(z);  // (-pi, pi]
    constexpr double q = 0.78539816339744830962;  // pi/4
    if (a >= -q && a < q) return z - 1.0;
    if (a >= q && a < 3 * q) return z - std::complex<double>(0.0, 1.0);
    if (a >= 3 * q || a < -3 * q) return z + 1.0;
    return z + std::complex<double>(0.0, 1.0);
}

namespace {

bool in_closed_diamond(std::complex<double> z) {
    return std::abs(z.real()) + std::abs(z.imag()) <= 1.0;
}

GaussianInt digit_from_displacement(std::complex<double> z, std::complex<double> w) {
    const std::complex<double> d = z - w;
    return {static_cast<std::int64_t>(std::llround(d.real())),
            static_cast<std::int64_t>(std::llround(d.imag()))};
}

}  // namespace

GaussianInt diamond_choose_single_step(std::complex<double> z, std::size_t budget) {
    std::complex<double> w = z;
    for (std::size_t n = 0; n < budget; ++n) {
        if (in_closed_diamond(w)) return digit_from_displacement(z, w);
        w = t_map(w);
    }
    throw IterationBudgetExceeded("diamond_choose: budget exhausted");
}

GaussianInt diamond_choose(std::complex<double> z) {
    // Same orbit as iterating t_map step by step, but axis runs and the
    // diagonal zigzag are taken as whole jumps:
    //  - with |x| >= |y| + 2 the next floor(|x| - |y| - 1) steps all subtract
    //    sgn(x), staying strictly inside one sector;
    //  - with ||x| - |y|| <= 1 and |x| + |y| >= 3 each consecutive pair of
    //    steps subtracts exactly (sgn(x), sgn(y)).
    std::complex<double> w = z;
    for (int guard = 0; guard < 256; ++guard) {
        if (in_closed_diamond(w)) return digit_from_displacement(z, w);
        const double x = w.real(), y = w.imag();
        const double ax = std::abs(x), ay = std::abs(y);
        if (ax >= ay + 2.0) {
            const double run = std::floor(ax - ay - 1.0);
            w -= std::complex<double>(std::copysign(run, x), 0.0);
            continue;
        }
        if (ay >= ax + 2.0) {
            const double run = std::floor(ay - ax - 1.0);
            w -= std::complex<double>(0.0, std::copysign(run, y));
            continue;
        }
        if (std::abs(ax - ay) <= 1.0 && ax + ay >= 5.0) {
            const double pairs = std::floor((ax + ay - 3.0) / 2.0);
            w -= std::complex<double>(std::copysign(pairs, x), std::copysign(pairs, y));
            continue;
        }
        w = t_map(w);
    }
    // Geometry near sector seams can dodge the jump conditions; finish step
    // by step from wherever the jumps got us.
    const GaussianInt head = digit_from_displacement(z, w);
    return head + diamond_choose_single_step(w);
}

GaussianInt choose(AlgorithmId alg, std::complex<double> z) {
    switch (alg) {
        case AlgorithmId::NearestInteger: return choose_nearest_integer(z);
        case AlgorithmId::NearestEven: return choose_nearest_even(z);
        case AlgorithmId::NearestOdd: return choose_nearest_odd(z);
        case AlgorithmId::Diamond: return diamond_choose(z);
        case AlgorithmId::Disk: return choose_disk(z);
        case AlgorithmId::ShiftedHurwitz: return choose_shifted_hurwitz(z);
    }
    return {0, 0};
}

namespace {

std::vector<Region> build_disk_v() {
    std::vector<Region> v(9);
    v[0] = disk_k();
    v[1] = Region::cell_of({disk_inside({0, 0}, 1.0), disk_outside({-1, -1}, 1.0)});
    for (int j = 2; j <= 4; ++j) v[j] = v[j - 1].transformed(kRotNegI);
    v[5] = v[1].intersected(v[2]);
    for (int j = 6; j <= 8; ++j) v[j] = v[j - 1].transformed(kRotNegI);
    return v;
}

bool in_disk_v(int j, std::complex<double> w) {
    return disk_v_region(j).contains(w, 0.0) == Verdict::In;
}

}  // namespace

const Region& disk_v_region(int j) {
    static const std::vector<Region> v = build_disk_v();
    return v.at(static_cast<std::size_t>(j));
}

int disk_sector(const GaussianInt& a) {
    if (a.is_zero()) return 0;
    if (!is_even(a)) throw InvalidDigit("disk digit must be even: " + to_string(a));
    GaussianInt b = a;
    for (int k = 0; k < 4; ++k) {
        // Coordinates in the basis alpha = 1+i, conj(alpha) = 1-i.
        const std::int64_t n = (b.re + b.im) / 2;
        const std::int64_t m = (b.re - b.im) / 2;
        if (n > 0 && m == 0) return 1 + k;
        if (n > 0 && m > 0) return 5 + k;
        b = b * GaussianInt{0, 1};
    }
    throw std::logic_error("disk_sector: unreachable");
}

std::vector<int> diamond_sector_pieces(const GaussianInt& a) {
    if (a.is_zero()) return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    // Rotate a into the base sector (positive real axis or closed first
    // quadrant off-axis); multiplying a set by i maps piece j to j-3 mod 12.
    GaussianInt b = a;
    int k = 0;
    auto in_base = [](const GaussianInt& g) { return g.re >= 1 && g.im >= 0; };
    while (!in_base(b) && k < 4) {
        b = b * GaussianInt{0, 1};
        ++k;
    }
    if (!in_base(b)) throw InvalidDigit("diamond sector undefined for " + to_string(a));
    std::vector<int> base;
    if (b.im == 0)
        base = (b.re == 1) ? std::vector<int>{5, 6, 7, 8, 9}
                           : std::vector<int>{3, 4, 5, 6, 7, 8, 9, 10, 11};
    else
        base = {3, 4, 5, 6, 7, 8};
    for (int& j : base) j = ((j - 1 + 3 * k) % 12 + 12) % 12 + 1;
    std::sort(base.begin(), base.end());
    return base;
}

Region choice_region(AlgorithmId alg, const GaussianInt& a) {
    if (!digit_admissible(alg, a))
        throw InvalidDigit(algorithm_name(alg) + ": inadmissible digit " + to_string(a));
    switch (alg) {
        case AlgorithmId::NearestInteger:
        case AlgorithmId::NearestEven:
        case AlgorithmId::NearestOdd:
        case AlgorithmId::ShiftedHurwitz: return fundamental_set(alg).translated(a);
        case AlgorithmId::Disk: return disk_v_region(disk_sector(a)).translated(a);
        case AlgorithmId::Diamond: {
            Region u = Region::empty();
            const auto& pieces = partition(AlgorithmId::Diamond);
            for (int j : diamond_sector_pieces(a)) u = u.united(pieces[j - 1]);
            return u.translated(a);
        }
    }
    return Region::empty();
}

Region cell(AlgorithmId alg, const GaussianInt& a) {
    if (!digit_admissible(alg, a)) return Region::empty();
    const Region cr = choice_region(alg, a);
    return fundamental_set(alg).intersected(cr.transformed(MobiusMap::inversion()));
}

}  // namespace ccf
