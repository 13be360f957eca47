#include "rrk/geometry/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#include <limits>

namespace rrk::geom::detail {

__attribute__((target("avx2"))) void upper_envelope_avx2(const MemberTable& t, const double* r1,
                                                         std::size_t n, double* out) {
  constexpr double ninf = -std::numeric_limits<double>::infinity();
  const __m256d vninf = _mm256_set1_pd(ninf);
  const __m256d vinf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < n; ++j) {
    const __m256d x = _mm256_set1_pd(r1[j]);
    __m256d best = vninf;
    for (std::size_t m = 0; m < t.stride; m += 4) {
      __m256d v = vinf;
      for (std::size_t k = 0; k < t.lines; ++k) {
        __m256d s = _mm256_loadu_pd(&t.slope[k * t.stride + m]);
        __m256d c = _mm256_loadu_pd(&t.icpt[k * t.stride + m]);
        __m256d y = _mm256_sub_pd(c, _mm256_mul_pd(s, x));
        v = _mm256_min_pd(y, v);
      }
      __m256d cover = _mm256_cmp_pd(x, _mm256_loadu_pd(&t.cap[m]), _CMP_LE_OQ);
      v = _mm256_blendv_pd(vninf, v, cover);
      best = _mm256_max_pd(v, best);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    double r = lanes[0];
    for (int i = 1; i < 4; ++i) r = lanes[i] > r ? lanes[i] : r;
    out[j] = r;
  }
}

}  // namespace rrk::geom::detail

#else

#include <stdexcept>

namespace rrk::geom::detail {
void upper_envelope_avx2(const MemberTable&, const double*, std::size_t, double*) {
  throw std::logic_error("avx2 kernel not built for this target");
}
}  // namespace rrk::geom::detail

#endif
