// Closed-form bounds, regime conditions and gap terms for the Gaussian model.
// All rates are in bits.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rrk/gaussian/channel.hpp"
#include "rrk/geometry/bound_set.hpp"

namespace rrk::gauss {

// log2(1 + x); throws std::invalid_argument for x < 0.
double cap_c(double x);

// alpha*P1 / (alpha*P1 + sigma2) * h; throws for sigma2 <= 0.
cplx lambda_costa(cplx h, double sigma2, double alpha, double P1);

// Rate of the binned codeword against the interference h with noise sigma2:
//   log2( (sigma2 + aP) / (sigma2 + aP |h|^2 P2 / (aP + |h|^2 P2 + sigma2)
//                                    * |lambda / lambda_costa - 1|^2) ),
// aP = alpha*P1. When lambda_costa is 0 the quotient is 0/0; lambda = 0 then
// gives log2(1 + aP/sigma2) by continuity and any other lambda throws
// std::domain_error.
double binning_f(cplx h, double sigma2, cplx lambda, double alpha, double P1, double P2);

struct SchemeParams {
  double alpha = 1;
  cplx lambda{0, 0};
  double sigma2_tilde = 1;
  void validate() const;
};

struct BcDmsParams {
  double alpha1 = 0, alpha2 = 0;
  cplx rho1{0, 0}, rho2{0, 0};
  // |rho1 sqrt(a1 a2) + rho2 sqrt((1-a1)(1-a2))| <= 1 (with 1e-12 slack).
  bool admissible() const;
  void validate() const;
};

enum class GRegion { OutBasic, OutBcDms, InSuperpos, InBinning, InBinningL0, InGapScheme, InTimeDiv };

const std::vector<GRegion>& all_gaussian_regions();
std::string region_name(GRegion r);  // "OUT_BASIC", ...
std::optional<GRegion> parse_gaussian_region(const std::string& name);
bool is_outer(GRegion r);

using RegionParams = std::variant<std::monostate, SchemeParams, BcDmsParams>;

// Parameter kinds: OUT_BASIC, IN_SUPERPOS, IN_BINNING_L0 and IN_GAPSCHEME
// read alpha (and sigma2_tilde) from SchemeParams; IN_BINNING also reads
// lambda; OUT_BCDMS takes BcDmsParams; IN_TIMEDIV takes none. IN_BINNING_L0
// requires b > 1. Throws std::invalid_argument on a parameter mismatch.
geom::BoundSet eval_gaussian_region(GRegion region, const ChannelGaussian& ch,
                                    const RegionParams& params);

struct VsiResult {
  bool holds = false;
  double slack = 0;
};
VsiResult vsi_gaussian(const ChannelGaussian& ch);

struct PdcResult {
  bool holds = false;
  double slack_a = 0;  // lhs - rhs of each condition
  double slack_b = 0;
};
PdcResult pdc_gaussian(const ChannelGaussian& ch);

struct GapTerms {
  double gap1 = 0;
  double gap2 = 0;
};
// GAP1 = log2(s + V/(1+V)) with V = P1 + |a|^2 P2 + 2 Re{a} sqrt((1-alpha) P1 P2);
// GAP2 = GAP1 - log2 Var[U1c | Y2] for U1c = X1 + a X2 + N, N ~ CN(0, s).
GapTerms gap_terms(const ChannelGaussian& ch, double alpha, double sigma2_tilde = 1);

// Corner rates of the time-division scheme: R1 alone and R2 alone.
struct TimeDivCorners {
  double r1 = 0;
  double r2 = 0;
};
TimeDivCorners timediv_corners(const ChannelGaussian& ch);

}  // namespace rrk::gauss
