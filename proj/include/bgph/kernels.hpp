#pragma once

#include <cstddef>
#include <cstdint>

// Row kernels for dense F_p elimination. These are the inner loops of every
// homology computation: with 2^m full subcomplexes per filtration step, the
// eliminations dominate the run time. Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2 variant selected at run time; the
// two are equivalence-tested element for element.
//
// Contracts shared by all kernels:
//   - residues are in [0, p), p <= 251 (so c*src + dst < 2^16 fits uint16_t)
//   - dst and src do not alias
namespace bgph::kernels {

// dst[k] = (dst[k] + c * src[k]) mod p
using axpy_fn = void (*)(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t c, std::size_t n,
                         std::uint16_t p);
// dst[k] = (dst[k] * c) mod p
using scale_fn = void (*)(std::uint16_t* dst, std::uint16_t c, std::size_t n, std::uint16_t p);
// dst[k] ^= src[k]  (the p = 2, c = 1 axpy)
using xor_fn = void (*)(std::uint16_t* dst, const std::uint16_t* src, std::size_t n);

struct kernel_table {
    axpy_fn axpy;
    scale_fn scale;
    xor_fn row_xor;
    const char* name;
};

void axpy_scalar(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t c, std::size_t n, std::uint16_t p);
void scale_scalar(std::uint16_t* dst, std::uint16_t c, std::size_t n, std::uint16_t p);
void xor_scalar(std::uint16_t* dst, const std::uint16_t* src, std::size_t n);

#if defined(BGPH_HAVE_AVX2_TU)
void axpy_avx2(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t c, std::size_t n, std::uint16_t p);
void scale_avx2(std::uint16_t* dst, std::uint16_t c, std::size_t n, std::uint16_t p);
void xor_avx2(std::uint16_t* dst, const std::uint16_t* src, std::size_t n);
#endif

const kernel_table& scalar_table();
// nullptr when the binary has no AVX2 translation unit or the CPU lacks AVX2.
const kernel_table* avx2_table_if_supported();

// Active table: AVX2 when supported unless BGPH_FORCE_SCALAR is set in the
// environment or force_scalar(true) was called.
const kernel_table& active();
void force_scalar(bool on);

}  // namespace bgph::kernels
