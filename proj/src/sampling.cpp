#include "ccf/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ccf/kernels.hpp"

namespace ccf {

namespace {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t RandomStream::bits(std::uint64_t index, std::uint64_t lane) const {
    return splitmix64(splitmix64(seed ^ 0x5851f42d4c957f2dULL) + index * 0x2545f4914f6cdd1dULL +
                      lane);
}

double RandomStream::uniform(std::uint64_t index, std::uint64_t lane) const {
    return static_cast<double>(bits(index, lane) >> 11) * 0x1.0p-53;
}

std::complex<double> RandomStream::point_in(const BBox& b, std::uint64_t index) const {
    return {b.xmin + (b.xmax - b.xmin) * uniform(index, 0),
            b.ymin + (b.ymax - b.ymin) * uniform(index, 1)};
}

namespace {

struct BlockCounters {
    std::uint64_t mismatches = 0;
    std::uint64_t near_excluded = 0;
    std::vector<std::complex<double>> witnesses;
};

constexpr std::size_t kBlock = 16384;
constexpr std::size_t kMaxWitnesses = 8;

template <class BlockFn>
ComparisonReport run_blocks(std::uint64_t n, std::uint64_t seed, const BlockFn& block_fn) {
    const std::size_t nblocks = static_cast<std::size_t>((n + kBlock - 1) / kBlock);
    std::vector<BlockCounters> counters(nblocks);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(hw, nblocks));
    std::vector<std::thread> workers;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t b = next.fetch_add(1); b < nblocks; b = next.fetch_add(1)) {
            const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
            const std::uint64_t end = std::min<std::uint64_t>(begin + kBlock, n);
            block_fn(begin, end, counters[b]);
        }
    };
    for (unsigned t = 1; t < nthreads; ++t) workers.emplace_back(work);
    work();
    for (auto& t : workers) t.join();

    ComparisonReport rep;
    rep.samples_total = n;
    rep.seed = seed;
    for (const BlockCounters& c : counters) {
        rep.mismatches += c.mismatches;
        rep.near_boundary_excluded += c.near_excluded;
        for (const auto& w : c.witnesses)
            if (rep.witnesses.size() < kMaxWitnesses) rep.witnesses.push_back(w);
    }
    rep.pass = rep.mismatches == 0;
    return rep;
}

}  // namespace

ComparisonReport ae_equal(const Region& a, const Region& b, const BBox& bbox, std::uint64_t n,
                          double eps, std::uint64_t seed) {
    const kernels::CompiledRegion ca = kernels::CompiledRegion::compile(a);
    const kernels::CompiledRegion cb = kernels::CompiledRegion::compile(b);
    const RandomStream rng(seed);
    auto block_fn = [&](std::uint64_t begin, std::uint64_t end, BlockCounters& c) {
        const std::size_t m = static_cast<std::size_t>(end - begin);
        std::vector<double> xs(m), ys(m);
        std::vector<std::uint8_t> va(m), vb(m);
        for (std::size_t i = 0; i < m; ++i) {
            const auto z = rng.point_in(bbox, begin + i);
            xs[i] = z.real();
            ys[i] = z.imag();
        }
        kernels::classify(ca, xs.data(), ys.data(), m, eps, va.data());
        kernels::classify(cb, xs.data(), ys.data(), m, eps, vb.data());
        for (std::size_t i = 0; i < m; ++i) {
            if (va[i] == 2 || vb[i] == 2) {
                ++c.near_excluded;
            } else if (va[i] != vb[i]) {
                ++c.mismatches;
                if (c.witnesses.size() < kMaxWitnesses) c.witnesses.emplace_back(xs[i], ys[i]);
            }
        }
    };
    return run_blocks(n, seed, block_fn);
}

ComparisonReport ae_compare(const MembershipFn& a, const MembershipFn& b, const BBox& bbox,
                            std::uint64_t n, double eps, std::uint64_t seed) {
    (void)eps;  // membership functions carry their own tolerance
    const RandomStream rng(seed);
    auto block_fn = [&](std::uint64_t begin, std::uint64_t end, BlockCounters& c) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const auto z = rng.point_in(bbox, i);
            const Verdict va = a(z);
            const Verdict vb = b(z);
            if (va == Verdict::NearBoundary || vb == Verdict::NearBoundary) {
                ++c.near_excluded;
            } else if (va != vb) {
                ++c.mismatches;
                if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back(z);
            }
        }
    };
    return run_blocks(n, seed, block_fn);
}

std::vector<std::complex<double>> sample_region(const Region& r, const BBox& bbox, std::size_t n,
                                                std::uint64_t seed, double eps) {
    const kernels::CompiledRegion cr = kernels::CompiledRegion::compile(r);
    const RandomStream rng(seed);
    std::vector<std::complex<double>> out;
    out.reserve(n);
    std::uint64_t attempts = 0;
    while (out.size() < n) {
        const auto z = rng.point_in(bbox, attempts);
        ++attempts;
        if (kernels::classify_one(cr, z.real(), z.imag(), eps) == Verdict::In) out.push_back(z);
        if (attempts >= 200000 && static_cast<double>(out.size()) < 1e-4 * attempts)
            throw RejectionBudgetExceeded("sample_region: acceptance rate below 1e-4");
    }
    return out;
}

std::optional<std::vector<std::size_t>> buildable_from(const Region& target,
                                                       const std::vector<Region>& pieces,
                                                       const BuildableParams& params) {
    std::vector<std::size_t> selected;
    Region unioned = Region::empty();
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        std::vector<std::complex<double>> pts;
        try {
            pts = sample_region(pieces[j], params.bbox, params.probe_points,
                                params.seed + 1000003 * (j + 1), params.probe_margin);
        } catch (const RejectionBudgetExceeded&) {
            continue;  // piece invisible in this bbox
        }
        bool inside = true;
        for (const auto& z : pts) {
            if (target.contains(z, params.eps) == Verdict::Out) {
                inside = false;
                break;
            }
        }
        if (inside) {
            selected.push_back(j);
            unioned = unioned.united(pieces[j]);
        }
    }
    const ComparisonReport rep =
        ae_equal(target, unioned, params.bbox, params.compare_samples, params.eps, params.seed);
    if (rep.pass) return selected;
    return std::nullopt;
}

}  // namespace ccf
