#include "rrk/geometry/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace rrk::geom {

MemberTable build_member_table(const std::vector<BoundSet>& members) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<const BoundSet*> ok;
  std::size_t lines = 0;
  for (const auto& b : members) {
    if (!all_finite(b)) continue;
    check_coefficients(b);
    std::size_t k = 0;
    for (const auto& e : b.entries)
      if (e.c2 > 0) ++k;
    if (k == 0) throw std::domain_error("region is unbounded in R2");
    lines = std::max(lines, k);
    ok.push_back(&b);
  }
  MemberTable t;
  t.members = ok.size();
  t.stride = (t.members + 3) / 4 * 4;
  t.lines = lines;
  t.cap.assign(t.stride, -inf);
  t.icpt.assign(lines * t.stride, inf);
  t.slope.assign(lines * t.stride, 0.0);
  for (std::size_t m = 0; m < ok.size(); ++m) {
    t.cap[m] = member_r1_max(*ok[m]);
    std::size_t k = 0;
    for (const auto& e : ok[m]->entries) {
      if (e.c2 <= 0) continue;
      t.icpt[k * t.stride + m] = std::max(e.value, 0.0) / e.c2;
      t.slope[k * t.stride + m] = e.c1 / e.c2;
      ++k;
    }
  }
  return t;
}

const char* kernel_name(KernelImpl k) {
  switch (k) {
    case KernelImpl::Scalar: return "scalar";
    case KernelImpl::Avx2: return "avx2";
    case KernelImpl::Neon: return "neon";
  }
  return "?";
}

bool kernel_available(KernelImpl k) {
  switch (k) {
    case KernelImpl::Scalar: return true;
    case KernelImpl::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case KernelImpl::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

KernelImpl active_kernel() {
  static const KernelImpl chosen = [] {
    const char* env = std::getenv("RRK_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return KernelImpl::Scalar;
    if (kernel_available(KernelImpl::Avx2)) return KernelImpl::Avx2;
    if (kernel_available(KernelImpl::Neon)) return KernelImpl::Neon;
    return KernelImpl::Scalar;
  }();
  return chosen;
}

void upper_envelope(const MemberTable& t, const double* r1, std::size_t n, double* out,
                    KernelImpl impl) {
  if (!kernel_available(impl)) throw std::invalid_argument("kernel not available on this CPU");
  switch (impl) {
    case KernelImpl::Scalar: detail::upper_envelope_scalar(t, r1, n, out); return;
    case KernelImpl::Avx2: detail::upper_envelope_avx2(t, r1, n, out); return;
    case KernelImpl::Neon: detail::upper_envelope_neon(t, r1, n, out); return;
  }
}

void upper_envelope(const MemberTable& t, const double* r1, std::size_t n, double* out) {
  upper_envelope(t, r1, n, out, active_kernel());
}

}  // namespace rrk::geom
