#include "wittrace/kernels.hpp"

namespace wittrace::kernels {

namespace {

void add_mod_s(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t m) {
  for (size_t i = 0; i < n; ++i) {
    uint32_t r = a[i] + b[i];
    out[i] = r >= m ? r - m : r;
  }
}

void sub_mod_s(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t m) {
  for (size_t i = 0; i < n; ++i) {
    uint32_t r = a[i] - b[i];
    out[i] = a[i] < b[i] ? r + m : r;
  }
}

void mul_mod_s(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n, uint32_t m) {
  for (size_t i = 0; i < n; ++i)
    out[i] = static_cast<uint32_t>((static_cast<uint64_t>(a[i]) * b[i]) % m);
}

uint32_t dot_mod_s(const uint32_t* a, const uint32_t* b, size_t n, uint32_t m) {
  // m < 2^16: each product < 2^32, so a 64-bit accumulator survives any
  // realistic length; reduce per block to keep the bound unconditional.
  uint64_t acc = 0;
  size_t i = 0;
  while (i < n) {
    size_t stop = std::min(n, i + (size_t{1} << 20));
    for (; i < stop; ++i) acc += static_cast<uint64_t>(a[i]) * b[i];
    acc %= m;
  }
  return static_cast<uint32_t>(acc % m);
}

int64_t dot_i32_s(const int32_t* a, const int32_t* b, size_t n) {
  int64_t acc = 0;
  for (size_t i = 0; i < n; ++i) acc += static_cast<int64_t>(a[i]) * b[i];
  return acc;
}

void add_i64_s(const int64_t* a, const int64_t* b, int64_t* out, size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_i64_s(const int64_t* a, const int64_t* b, int64_t* out, size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

}  // namespace

const Ops& scalar() {
  static const Ops ops{
      "scalar", add_mod_s, sub_mod_s, mul_mod_s, dot_mod_s, dot_i32_s, add_i64_s, sub_i64_s,
  };
  return ops;
}

}  // namespace wittrace::kernels
