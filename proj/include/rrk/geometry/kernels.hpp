// Upper envelope of many member polygons evaluated on a set of R1 values.
//
// Member m admits R2 <= min_k (icpt[k][m] - slope[k][m] * r1) whenever
// r1 <= cap[m]. Rows are stored structure-of-arrays and padded to a
// multiple of 4 members; padding members have cap = -inf.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rrk/geometry/bound_set.hpp"

namespace rrk::geom {

struct MemberTable {
  std::size_t members = 0;
  std::size_t stride = 0;  // padded member count
  std::size_t lines = 0;
  std::vector<double> cap;    // stride
  std::vector<double> icpt;   // lines * stride
  std::vector<double> slope;  // lines * stride
};

// Members with non-finite values are skipped; returns the number kept.
MemberTable build_member_table(const std::vector<BoundSet>& members);

enum class KernelImpl { Scalar, Avx2, Neon };

const char* kernel_name(KernelImpl k);
bool kernel_available(KernelImpl k);
// Best available variant; RRK_SIMD=scalar forces the reference kernel.
KernelImpl active_kernel();

// out[j] = max over members covering r1[j] of the member's R2 limit, or -inf.
void upper_envelope(const MemberTable& t, const double* r1, std::size_t n, double* out,
                    KernelImpl impl);
void upper_envelope(const MemberTable& t, const double* r1, std::size_t n, double* out);

namespace detail {
void upper_envelope_scalar(const MemberTable& t, const double* r1, std::size_t n, double* out);
void upper_envelope_avx2(const MemberTable& t, const double* r1, std::size_t n, double* out);
void upper_envelope_neon(const MemberTable& t, const double* r1, std::size_t n, double* out);
}  // namespace detail

}  // namespace rrk::geom
