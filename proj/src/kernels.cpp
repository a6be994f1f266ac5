#include "halcbc/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace halcbc::kernels {

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

namespace {

Backend detect_backend() {
    if (const char* env = std::getenv("HALTON_CBC_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0) {
            if (!avx2_supported())
                throw std::runtime_error("HALTON_CBC_KERNEL=avx2 but AVX2 is not available");
            return Backend::avx2;
        }
        throw std::runtime_error(std::string("HALTON_CBC_KERNEL: unknown backend '") + env + "'");
    }
    return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

std::atomic<int> g_forced{-1};

} // namespace

Backend active_backend() {
    const int forced = g_forced.load(std::memory_order_acquire);
    if (forced >= 0) return static_cast<Backend>(forced);
    static const Backend detected = detect_backend();
    return detected;
}

void force_backend(Backend backend) {
    if (backend == Backend::avx2 && !avx2_supported())
        throw std::runtime_error("force_backend: AVX2 is not available on this CPU");
    g_forced.store(static_cast<int>(backend), std::memory_order_release);
}

const char* backend_name(Backend backend) {
    return backend == Backend::avx2 ? "avx2" : "scalar";
}

const Ops& ops() {
    return active_backend() == Backend::avx2 ? avx2_ops() : scalar_ops();
}

} // namespace halcbc::kernels
