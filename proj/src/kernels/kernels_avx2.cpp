// AVX2 variants of the kernel table.  This translation unit is the only one
// compiled with -mavx2; callers reach it through kernels::active() after a
// runtime CPU check.

#include "wittrace/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>

namespace wittrace::kernels {

namespace {

void add_mod_v(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t m) {
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i r = _mm256_add_epi32(va, vb);
    // r < 2m < 2^32: r-m wraps to a huge value exactly when r < m
    r = _mm256_min_epu32(r, _mm256_sub_epi32(r, vm));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
  }
  for (; i < n; ++i) {
    uint32_t r = a[i] + b[i];
    out[i] = r >= m ? r - m : r;
  }
}

void sub_mod_v(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t m) {
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i r = _mm256_sub_epi32(va, vb);
    r = _mm256_min_epu32(r, _mm256_add_epi32(r, vm));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
  }
  for (; i < n; ++i) {
    uint32_t r = a[i] - b[i];
    out[i] = a[i] < b[i] ? r + m : r;
  }
}

// Barrett reduction of x < 2^32 with m < 2^16: q = floor(x*nu / 2^32) with
// nu = floor(2^32/m) undershoots floor(x/m) by at most one.
inline __m256i barrett_u32(__m256i x, __m256i vnu, __m256i vm) {
  __m256i x_odd = _mm256_srli_epi64(x, 32);
  __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(x, vnu), 32);
  __m256i q_odd = _mm256_srli_epi64(_mm256_mul_epu32(x_odd, vnu), 32);
  __m256i q = _mm256_blend_epi32(q_even, _mm256_slli_epi64(q_odd, 32), 0xAA);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vm));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, vm));
}

void mul_mod_v(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t m) {
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  const uint32_t nu = static_cast<uint32_t>((uint64_t{1} << 32) / m);
  const __m256i vnu = _mm256_set1_epi32(static_cast<int>(nu));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // residues < 2^16, so the low 32 bits hold the full product
    __m256i p = _mm256_mullo_epi32(va, vb);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), barrett_u32(p, vnu, vm));
  }
  for (; i < n; ++i)
    out[i] = static_cast<uint32_t>((static_cast<uint64_t>(a[i]) * b[i]) % m);
}

uint32_t dot_mod_v(const uint32_t* a, const uint32_t* b, size_t n, uint32_t m) {
  uint64_t total = 0;
  size_t i = 0;
  while (i < n) {
    size_t stop = std::min(n, i + (size_t{1} << 20));
    __m256i acc = _mm256_setzero_si256();
    for (; i + 8 <= stop; i += 8) {
      __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      __m256i pe = _mm256_mul_epu32(va, vb);
      __m256i po = _mm256_mul_epu32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32));
      acc = _mm256_add_epi64(acc, _mm256_add_epi64(pe, po));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t s = 0;
    for (uint64_t l : lanes) s += l % m;
    for (; i < stop; ++i) s += static_cast<uint64_t>(a[i]) * b[i] % m;
    total = (total + s) % m;
  }
  return static_cast<uint32_t>(total);
}

int64_t dot_i32_v(const int32_t* a, const int32_t* b, size_t n) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i pe = _mm256_mul_epi32(va, vb);
    __m256i po = _mm256_mul_epi32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32));
    acc = _mm256_add_epi64(acc, _mm256_add_epi64(pe, po));
  }
  alignas(32) int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  int64_t s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) s += static_cast<int64_t>(a[i]) * b[i];
  return s;
}

void add_i64_v(const int64_t* a, const int64_t* b, int64_t* out, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi64(va, vb));
  }
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_i64_v(const int64_t* a, const int64_t* b, int64_t* out, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_sub_epi64(va, vb));
  }
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

}  // namespace

const Ops& avx2() {
  static const Ops ops{
      "avx2", add_mod_v, sub_mod_v, mul_mod_v, dot_mod_v, dot_i32_v, add_i64_v, sub_i64_v,
  };
  return ops;
}

}  // namespace wittrace::kernels

#endif
