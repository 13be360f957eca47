// Parameter sweeps that turn Gaussian bound families into frontiers.
#pragma once

#include <vector>

#include "rrk/gaussian/bounds.hpp"
#include "rrk/geometry/frontier.hpp"

namespace rrk::gauss {

enum class LambdaPolicy {
  Costa,  // lambda = lambda_costa(a + sqrt(abar P1/P2), 1) for each alpha
  Zero,
  Fixed,  // FamilySpec::lambda; alphas where lambda_costa vanishes are skipped
};

struct FamilySpec {
  std::size_t alpha_points = 1001;
  LambdaPolicy lambda_policy = LambdaPolicy::Costa;
  cplx lambda{0, 0};
  double sigma2_tilde = 1;
  // OUT_BCDMS grid: alpha1 x alpha2 x |rho1| x arg(rho1) x |rho2| x arg(rho2).
  std::size_t bc_alpha_points = 11;
  std::size_t bc_modulus_points = 6;
  std::size_t bc_phase_points = 4;
};

// linspace(0, 1, n); throws for n < 2.
std::vector<double> alpha_grid(std::size_t n);

// Lambda used by IN_BINNING at this alpha under the policy.
cplx binning_lambda(const ChannelGaussian& ch, double alpha, const FamilySpec& spec);

// Every member parameter set the family sweeps, in a fixed order.
std::vector<RegionParams> family_params(GRegion region, const ChannelGaussian& ch,
                                        const FamilySpec& spec);

geom::Frontier gaussian_frontier(GRegion region, const ChannelGaussian& ch,
                                 const FamilySpec& spec = {}, const geom::R1Grid& r1 = {});

}  // namespace rrk::gauss
