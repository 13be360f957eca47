#include "rrk/geometry/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

#include <limits>

namespace rrk::geom::detail {

void upper_envelope_neon(const MemberTable& t, const double* r1, std::size_t n, double* out) {
  constexpr double ninf = -std::numeric_limits<double>::infinity();
  const float64x2_t vninf = vdupq_n_f64(ninf);
  const float64x2_t vinf = vdupq_n_f64(std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < n; ++j) {
    const float64x2_t x = vdupq_n_f64(r1[j]);
    float64x2_t best = vninf;
    for (std::size_t m = 0; m < t.stride; m += 2) {
      float64x2_t v = vinf;
      for (std::size_t k = 0; k < t.lines; ++k) {
        float64x2_t s = vld1q_f64(&t.slope[k * t.stride + m]);
        float64x2_t c = vld1q_f64(&t.icpt[k * t.stride + m]);
        float64x2_t y = vsubq_f64(c, vmulq_f64(s, x));
        v = vminq_f64(y, v);
      }
      uint64x2_t cover = vcleq_f64(x, vld1q_f64(&t.cap[m]));
      v = vbslq_f64(cover, v, vninf);
      best = vmaxq_f64(v, best);
    }
    double a = vgetq_lane_f64(best, 0), b = vgetq_lane_f64(best, 1);
    out[j] = b > a ? b : a;
  }
}

}  // namespace rrk::geom::detail

#else

#include <stdexcept>

namespace rrk::geom::detail {
void upper_envelope_neon(const MemberTable&, const double*, std::size_t, double*) {
  throw std::logic_error("neon kernel not built for this target");
}
}  // namespace rrk::geom::detail

#endif
