#include "copocone/simd.hpp"

#include <cstdlib>
#include <cstring>

#include "simd/kernels.hpp"

namespace copocone::simd {

namespace {

const Kernels kScalar{u_factors_scalar, quad_form_min_scalar, "scalar"};

#ifdef COPOCONE_HAVE_AVX2_KERNELS
const Kernels kAvx2{u_factors_avx2, quad_form_min_avx2, "avx2"};
#endif
#ifdef COPOCONE_HAVE_NEON_KERNELS
const Kernels kNeon{u_factors_neon, quad_form_min_neon, "neon"};
#endif

const Kernels* detect_vector() {
#ifdef COPOCONE_HAVE_AVX2_KERNELS
  if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
#ifdef COPOCONE_HAVE_NEON_KERNELS
  return &kNeon;
#endif
  return nullptr;
}

const Kernels& select() {
  const Kernels* vec = detect_vector();
  const char* env = std::getenv("COPOCONE_SIMD");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return kScalar;
    if (vec != nullptr && std::strcmp(env, vec->name) == 0) return *vec;
    return kScalar;
  }
  return vec != nullptr ? *vec : kScalar;
}

}  // namespace

const Kernels& active() {
  static const Kernels& chosen = select();
  return chosen;
}

const Kernels& scalar_kernels() { return kScalar; }

const Kernels* vector_kernels() { return detect_vector(); }

}  // namespace copocone::simd
