#include <limits>

#include "rrk/geometry/kernels.hpp"

namespace rrk::geom::detail {

void upper_envelope_scalar(const MemberTable& t, const double* r1, std::size_t n, double* out) {
  constexpr double ninf = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    const double x = r1[j];
    double best = ninf;
    for (std::size_t m = 0; m < t.stride; ++m) {
      double v = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < t.lines; ++k) {
        double p = t.slope[k * t.stride + m] * x;
        double y = t.icpt[k * t.stride + m] - p;
        v = y < v ? y : v;
      }
      v = x <= t.cap[m] ? v : ninf;
      best = v > best ? v : best;
    }
    out[j] = best;
  }
}

}  // namespace rrk::geom::detail
