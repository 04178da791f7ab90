#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccf/algorithms.hpp"
#include "ccf/sampling.hpp"

using namespace ccf;

namespace {

std::complex<double> C(double re, double im = 0.0) { return {re, im}; }

}  // namespace

TEST_CASE("algorithm names round trip") {
    for (AlgorithmId id : kAllAlgorithms) {
        CHECK(parse_algorithm(algorithm_name(id)) == id);
    }
    CHECK(!parse_algorithm("nearest").has_value());
}

TEST_CASE("nearest integer choice") {
    CHECK(choose(AlgorithmId::NearestInteger, C(0.5, 0.5)) == GaussianInt{1, 1});
    CHECK(choose(AlgorithmId::NearestInteger, C(-2.5, 0)) == GaussianInt{-2, 0});
    CHECK(choose(AlgorithmId::NearestInteger, C(0, 0)) == GaussianInt{0, 0});
}

TEST_CASE("nearest even choice formula") {
    CHECK(choose(AlgorithmId::NearestEven, C(1.0)) == GaussianInt{2, 0});
    CHECK(choose(AlgorithmId::NearestEven, C(0.6, 0.6)) == GaussianInt{1, 1});
    CHECK(choose(AlgorithmId::NearestEven, C(-2.5)) == GaussianInt{-2, 0});
    CHECK(choose(AlgorithmId::NearestEven, C(0, 0)) == GaussianInt{0, 0});
}

TEST_CASE("nearest odd choice") {
    // At 0 the four nearest odd integers tie; convention picks 1.
    CHECK(choose(AlgorithmId::NearestOdd, C(0, 0)) == GaussianInt{1, 0});
    CHECK(choose(AlgorithmId::NearestOdd, C(0.9, 0.1)) == GaussianInt{1, 0});
    CHECK(is_odd(choose(AlgorithmId::NearestOdd, C(0.5, 0.5))));
}

TEST_CASE("shifted Hurwitz choice minimizes |z - h - d|") {
    // z = -0.9: h = 0 gives 0.4, h = -1 gives 0.6.
    CHECK(choose(AlgorithmId::ShiftedHurwitz, C(-0.9)) == GaussianInt{0, 0});
    CHECK(choose(AlgorithmId::ShiftedHurwitz, C(0, 0)) == GaussianInt{0, 0});
    // Deep in a translate the shift is irrelevant.
    CHECK(choose(AlgorithmId::ShiftedHurwitz, C(3.6, -2.1)) == GaussianInt{4, -2});
}

TEST_CASE("disk choice via the V sectors") {
    CHECK(choose(AlgorithmId::Disk, C(1.4, 1.4)) == GaussianInt{1, 1});
    CHECK(choose(AlgorithmId::Disk, C(0, 0)) == GaussianInt{0, 0});
    CHECK(choose(AlgorithmId::Disk, C(0.3, -0.2)) == GaussianInt{0, 0});
}

TEST_CASE("disk sector classifier") {
    CHECK(disk_sector({0, 0}) == 0);
    CHECK(disk_sector({1, 1}) == 1);    // positive multiples of 1+i
    CHECK(disk_sector({2, 2}) == 1);
    CHECK(disk_sector({1, -1}) == 2);
    CHECK(disk_sector({-1, -1}) == 3);
    CHECK(disk_sector({-1, 1}) == 4);
    CHECK(disk_sector({2, 0}) == 5);    // open sector between the rays
    CHECK(disk_sector({0, -2}) == 6);
    CHECK(disk_sector({-2, 0}) == 7);
    CHECK(disk_sector({0, 2}) == 8);
    CHECK_THROWS_AS(disk_sector({1, 0}), InvalidDigit);
}

TEST_CASE("disk V tables") {
    // V_j = -i V_{j-1} for j in {2,3,4,6,7,8}.
    const MobiusMap rot = MobiusMap::rotation({0, -1});
    for (int j : {2, 3, 4, 6, 7, 8}) {
        const auto rep = ae_equal(disk_v_region(j), disk_v_region(j - 1).transformed(rot),
                                  BBox::square(1.1), 100000, 1e-9, 100 + j);
        CHECK(rep.pass);
    }
    // V_5 = V_1 intersect V_2.
    const auto rep = ae_equal(disk_v_region(5), disk_v_region(1).intersected(disk_v_region(2)),
                              BBox::square(1.1), 100000, 1e-9, 99);
    CHECK(rep.pass);
}

TEST_CASE("t map sectors") {
    CHECK(t_map(C(0, 0)) == C(0, 0));
    CHECK(std::abs(t_map(C(2.3)) - C(1.3)) < 1e-12);
    CHECK(t_map(C(0, 2)) == C(0, 1));
    CHECK(t_map(C(-2.5, 0.1)) == C(-1.5, 0.1));
    CHECK(t_map(C(0.1, -2.0)) == C(0.1, -1.0));
}

TEST_CASE("diamond choice") {
    CHECK(choose(AlgorithmId::Diamond, C(0.2, -0.3)) == GaussianInt{0, 0});
    CHECK(choose(AlgorithmId::Diamond, C(2.5)) == GaussianInt{2, 0});
    CHECK(choose(AlgorithmId::Diamond, C(1.2, 1.2)) == GaussianInt{1, 1});
}

TEST_CASE("diamond fast path equals single stepping") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> small(-30.0, 30.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int t = 0; t < 20000; ++t) {
        std::complex<double> z;
        switch (t % 4) {
            case 0: z = {small(rng), small(rng)}; break;
            case 1: {  // near a diagonal
                const double m = std::abs(small(rng));
                z = {m + 0.4 * unit(rng), (t % 8 < 4 ? m : -m) + 0.4 * unit(rng)};
                break;
            }
            case 2: z = {small(rng), 0.3 * unit(rng)}; break;  // near the real axis
            default: z = {0.3 * unit(rng), small(rng)};
        }
        CHECK(diamond_choose(z) == diamond_choose_single_step(z));
    }
    // Large inputs terminate and satisfy the choice contract.
    for (int t = 0; t < 2000; ++t) {
        const std::complex<double> z{small(rng) * 1e7, small(rng) * 1e7};
        const GaussianInt a = diamond_choose(z);
        CHECK(std::abs(z - to_complex(a)) <= 1.0 + 1e-9);
    }
}

TEST_CASE("fundamental sets") {
    CHECK(fundamental_set(AlgorithmId::Disk).contains(C(0.99, 0), 1e-9) == Verdict::In);
    // Diamond |Re| + |Im| <= 1 is shared by three algorithms.
    for (AlgorithmId id :
         {AlgorithmId::NearestEven, AlgorithmId::NearestOdd, AlgorithmId::Diamond}) {
        const Region& K = fundamental_set(id);
        CHECK(K.contains(C(0.4, 0.5), 1e-9) == Verdict::In);
        CHECK(K.contains(C(0.7, 0.4), 1e-9) == Verdict::Out);
    }
    // Shifted square: -0.9 is inside (the left boundary bulges to the unit
    // circle), 0.2 is outside (right boundary curves at |z-1| = 1). Points
    // slightly off the real axis avoid the internal piece seam at Im = 0.
    const Region& Ksh = fundamental_set(AlgorithmId::ShiftedHurwitz);
    CHECK(Ksh.contains(C(-0.9, 0.01), 1e-9) == Verdict::In);
    CHECK(Ksh.contains(C(0.2, 0.01), 1e-9) == Verdict::Out);
    // The right boundary |z-1| = 1 passes through 0 and (1 - sqrt(3)/2, 1/2).
    CHECK(Ksh.contains(C(0.1, 0.01), 1e-9) == Verdict::Out);
    CHECK(Ksh.contains(C(0.1, 0.49), 1e-9) == Verdict::In);
    CHECK(Ksh.contains(C(-0.9), 1e-9) != Verdict::Out);
}

TEST_CASE("fundamental set contract: z - choose(z) lands in K") {
    RandomStream rng(20260810);
    for (AlgorithmId id : kAllAlgorithms) {
        const Region& K = fundamental_set(id);
        int bad = 0;
        for (std::uint64_t i = 0; i < 100000; ++i) {
            const std::complex<double> z{-3.0 + 6.0 * rng.uniform(i, 0),
                                         -3.0 + 6.0 * rng.uniform(i, 1)};
            const GaussianInt a = choose(id, z);
            if (std::abs(z - to_complex(a)) > 1.0 + 1e-12) ++bad;
            if (K.contains(z - to_complex(a), 1e-9) == Verdict::Out) ++bad;
            if (!digit_admissible(id, a)) ++bad;
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("partition sizes and disjointness") {
    const std::pair<AlgorithmId, std::size_t> sizes[] = {
        {AlgorithmId::NearestInteger, 12}, {AlgorithmId::NearestEven, 8},
        {AlgorithmId::NearestOdd, 12},     {AlgorithmId::Diamond, 12},
        {AlgorithmId::Disk, 5},            {AlgorithmId::ShiftedHurwitz, 10},
    };
    for (const auto& [id, n] : sizes) {
        const auto& pieces = partition(id);
        REQUIRE(pieces.size() == n);

        // Pieces pairwise interior-disjoint and their union is K.
        Region u = Region::empty();
        for (const Region& p : pieces) u = u.united(p);
        const auto rep = ae_equal(u, fundamental_set(id), BBox::square(1.05), 200000, 1e-9,
                                  static_cast<int>(id) * 7 + 1);
        CHECK(rep.pass);

        RandomStream rng(static_cast<int>(id) * 31 + 5);
        int doubly_covered = 0;
        for (std::uint64_t i = 0; i < 20000; ++i) {
            const std::complex<double> z{-1.05 + 2.1 * rng.uniform(i, 0),
                                         -1.05 + 2.1 * rng.uniform(i, 1)};
            int hits = 0;
            for (const Region& p : pieces)
                if (p.contains(z, 1e-9) == Verdict::In) ++hits;
            if (hits > 1) ++doubly_covered;
        }
        CHECK(doubly_covered == 0);
    }
}

TEST_CASE("rotation coherence of the nearest-integer partition") {
    const auto& pieces = partition(AlgorithmId::NearestInteger);
    const MobiusMap rot = MobiusMap::rotation({0, -1});
    for (int i = 0; i + 3 < 12; ++i) {
        const auto rep = ae_equal(pieces[i + 3], pieces[i].transformed(rot), BBox::square(0.8),
                                  100000, 1e-9, 200 + i);
        CHECK(rep.pass);
    }
}

TEST_CASE("choice regions") {
    SUBCASE("translate algorithms") {
        const Region r = choice_region(AlgorithmId::NearestEven, {2, 0});
        CHECK(r.contains(C(2.0, 0.0), 1e-9) == Verdict::In);
        CHECK(r.contains(C(2.0, 0.9), 1e-9) == Verdict::In);
        CHECK(r.contains(C(0.5, 0.0), 1e-9) == Verdict::Out);
        CHECK_THROWS_AS(choice_region(AlgorithmId::NearestEven, GaussianInt{1, 0}), InvalidDigit);
        CHECK_THROWS_AS(choice_region(AlgorithmId::NearestOdd, GaussianInt{0, 0}), InvalidDigit);
    }
    SUBCASE("interior points of choice regions really choose that digit") {
        std::mt19937_64 gen(5);
        std::uniform_int_distribution<std::int64_t> di(-4, 4);
        for (AlgorithmId id : kAllAlgorithms) {
            int tested = 0;
            while (tested < 25) {
                const GaussianInt a{di(gen), di(gen)};
                if (!digit_admissible(id, a)) continue;
                if (id == AlgorithmId::NearestOdd && a.is_zero()) continue;
                const Region cr = choice_region(id, a);
                const BBox box{to_complex(a).real() - 1.1, to_complex(a).real() + 1.1,
                               to_complex(a).imag() - 1.1, to_complex(a).imag() + 1.1};
                const auto pts = sample_region(cr, box, 160, 777 + tested, 1e-6);
                for (const auto& z : pts) CHECK(choose(id, z) == a);
                ++tested;
            }
        }
    }
}

TEST_CASE("cells") {
    SUBCASE("cell of 0 for the nearest even algorithm is empty") {
        const Region c = cell(AlgorithmId::NearestEven, {0, 0});
        CHECK_THROWS_AS(sample_region(c, BBox::square(1.05), 4, 1), RejectionBudgetExceeded);
    }
    SUBCASE("Gauss image of the nearest-integer cell of 2 is {z in K : |z+1| >= 1}") {
        // G(<2>) = T^{-2} S(<2>) = K intersect (S(K) - 2).
        const Region c = cell(AlgorithmId::NearestInteger, {2, 0});
        const Region image =
            c.transformed(MobiusMap::translation({-2, 0}) * MobiusMap::inversion());
        const Region expected = fundamental_set(AlgorithmId::NearestInteger)
                                    .intersected(Region::cell_of({disk_outside({-1, 0}, 1.0)}));
        const auto rep = ae_equal(image, expected, BBox::square(0.8), 200000, 1e-9, 17);
        CHECK(rep.pass);
    }
    SUBCASE("disk cell of 1+i is the piece K_2") {
        const Region c = cell(AlgorithmId::Disk, {1, 1});
        const auto rep =
            ae_equal(c, partition(AlgorithmId::Disk)[1], BBox::square(1.05), 200000, 1e-9, 18);
        CHECK(rep.pass);
    }
}
