#ifndef WITTRACE_KERNELS_HPP
#define WITTRACE_KERNELS_HPP

#include <cstddef>
#include <cstdint>

#include "wittrace/bigint.hpp"

namespace wittrace::kernels {

// Vectorizable inner loops behind the exact arithmetic:
//   - residue vectors mod m, with m < 2^16 so products fit in 32 bits and
//     dot products accumulate in 64 bits without intermediate reduction;
//   - int32 dot products with int64 accumulation (callers prove no overflow
//     before taking this lane and fall back to bignum otherwise);
//   - elementwise int64 add/sub (again caller-bounded).
// Each operation has a scalar reference implementation and, on x86, an AVX2
// variant; the active table is chosen once at startup.
struct Ops {
  const char* name;

  void (*add_mod)(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t m);
  void (*sub_mod)(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t m);
  void (*mul_mod)(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t m);
  uint32_t (*dot_mod)(const uint32_t* a, const uint32_t* b, size_t n, uint32_t m);

  int64_t (*dot_i32)(const int32_t* a, const int32_t* b, size_t n);
  void (*add_i64)(const int64_t* a, const int64_t* b, int64_t* out, size_t n);
  void (*sub_i64)(const int64_t* a, const int64_t* b, int64_t* out, size_t n);
};

const Ops& scalar();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2();     // call only when avx2_supported()
#endif
bool avx2_supported();

// Table selected at startup: AVX2 when the CPU has it, else scalar.
// WITTRACE_KERNEL=scalar|avx2 in the environment overrides the choice.
const Ops& active();

inline bool small_modulus(const Int& m) { return m >= 2 && m < 65536; }

}  // namespace wittrace::kernels

#endif
