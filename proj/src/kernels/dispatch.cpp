#include "wittrace/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace wittrace::kernels {

bool avx2_supported() {
#if defined(WITTRACE_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Ops& active() {
  static const Ops& chosen = []() -> const Ops& {
    if (const char* env = std::getenv("WITTRACE_KERNEL")) {
      if (std::strcmp(env, "scalar") == 0) return scalar();
#if defined(WITTRACE_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
      if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return avx2();
#endif
    }
#if defined(WITTRACE_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
    if (avx2_supported()) return avx2();
#endif
    return scalar();
  }();
  return chosen;
}

}  // namespace wittrace::kernels
