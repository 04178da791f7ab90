#include <atomic>
#include <cstdlib>
#include <cstring>

#include "ccf/kernels.hpp"

namespace ccf::kernels {

bool avx2_supported() {
#if defined(__GNUC__) && defined(__x86_64__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

Backend detect() {
    if (const char* env = std::getenv("CCF_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Backend::Avx2;
    }
    return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend> g_backend{detect()};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (b == Backend::Avx2 && !avx2_supported()) b = Backend::Scalar;
    g_backend.store(b, std::memory_order_relaxed);
}

void classify(const CompiledRegion& r, const double* xs, const double* ys, std::size_t n,
              double eps, std::uint8_t* out) {
    if (active_backend() == Backend::Avx2)
        classify_avx2(r, xs, ys, n, eps, out);
    else
        classify_scalar(r, xs, ys, n, eps, out);
}

}  // namespace ccf::kernels
