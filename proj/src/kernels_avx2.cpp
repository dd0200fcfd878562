#include <immintrin.h>

#include "bgph/kernels.hpp"

// 16-lane uint16_t kernels. Reduction mod p uses a mulhi estimate of x/p
// with one correcting subtract:
//   M  = floor(2^16 / p)
//   q  = mulhi_epu16(x, M)      which lands in {floor(x/p) - 1, floor(x/p)}
//   r  = x - q*p                in [0, 2p)
//   r  = min(r, r - p)          unsigned wrap selects the reduced value
// Exact for all x < 2^16, which the p <= 251 residue contract guarantees.
namespace bgph::kernels {

namespace {

inline __m256i reduce_mod(__m256i x, __m256i pv, __m256i magic) {
    __m256i q = _mm256_mulhi_epu16(x, magic);
    __m256i r = _mm256_sub_epi16(x, _mm256_mullo_epi16(q, pv));
    return _mm256_min_epu16(r, _mm256_sub_epi16(r, pv));
}

}  // namespace

void axpy_avx2(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t c, std::size_t n,
               std::uint16_t p) {
    const __m256i pv = _mm256_set1_epi16(static_cast<short>(p));
    const __m256i cv = _mm256_set1_epi16(static_cast<short>(c));
    const __m256i magic = _mm256_set1_epi16(static_cast<short>(65536u / p));
    std::size_t k = 0;
    for (; k + 16 <= n; k += 16) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
        __m256i x = _mm256_add_epi16(d, _mm256_mullo_epi16(cv, s));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), reduce_mod(x, pv, magic));
    }
    if (k < n) axpy_scalar(dst + k, src + k, c, n - k, p);
}

void scale_avx2(std::uint16_t* dst, std::uint16_t c, std::size_t n, std::uint16_t p) {
    const __m256i pv = _mm256_set1_epi16(static_cast<short>(p));
    const __m256i cv = _mm256_set1_epi16(static_cast<short>(c));
    const __m256i magic = _mm256_set1_epi16(static_cast<short>(65536u / p));
    std::size_t k = 0;
    for (; k + 16 <= n; k += 16) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
        __m256i x = _mm256_mullo_epi16(cv, d);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), reduce_mod(x, pv, magic));
    }
    if (k < n) scale_scalar(dst + k, c, n - k, p);
}

void xor_avx2(std::uint16_t* dst, const std::uint16_t* src, std::size_t n) {
    std::size_t k = 0;
    for (; k + 16 <= n; k += 16) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_xor_si256(d, s));
    }
    if (k < n) xor_scalar(dst + k, src + k, n - k);
}

}  // namespace bgph::kernels
