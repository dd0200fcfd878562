#include "bgph/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace bgph::kernels {

void axpy_scalar(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t c, std::size_t n,
                 std::uint16_t p) {
    for (std::size_t k = 0; k < n; ++k)
        dst[k] = static_cast<std::uint16_t>((std::uint32_t(dst[k]) + std::uint32_t(c) * src[k]) % p);
}

void scale_scalar(std::uint16_t* dst, std::uint16_t c, std::size_t n, std::uint16_t p) {
    for (std::size_t k = 0; k < n; ++k)
        dst[k] = static_cast<std::uint16_t>(std::uint32_t(dst[k]) * c % p);
}

void xor_scalar(std::uint16_t* dst, const std::uint16_t* src, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) dst[k] ^= src[k];
}

const kernel_table& scalar_table() {
    static const kernel_table t{axpy_scalar, scale_scalar, xor_scalar, "scalar"};
    return t;
}

#if defined(BGPH_HAVE_AVX2_TU)
const kernel_table* avx2_table_if_supported() {
#if defined(__GNUC__)
    static const bool supported = __builtin_cpu_supports("avx2");
#else
    static const bool supported = false;
#endif
    if (!supported) return nullptr;
    static const kernel_table t{axpy_avx2, scale_avx2, xor_avx2, "avx2"};
    return &t;
}
#else
const kernel_table* avx2_table_if_supported() { return nullptr; }
#endif

namespace {
std::atomic<bool> g_force_scalar{false};

bool env_force_scalar() {
    static const bool v = std::getenv("BGPH_FORCE_SCALAR") != nullptr;
    return v;
}
}  // namespace

void force_scalar(bool on) { g_force_scalar.store(on); }

const kernel_table& active() {
    if (g_force_scalar.load() || env_force_scalar()) return scalar_table();
    if (const kernel_table* t = avx2_table_if_supported()) return *t;
    return scalar_table();
}

}  // namespace bgph::kernels
