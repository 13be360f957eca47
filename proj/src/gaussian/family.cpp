#include "rrk/gaussian/family.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rrk::gauss {

std::vector<double> alpha_grid(std::size_t n) {
  if (n < 2) throw std::invalid_argument("alpha grid needs at least 2 points");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

cplx binning_lambda(const ChannelGaussian& ch, double alpha, const FamilySpec& spec) {
  switch (spec.lambda_policy) {
    case LambdaPolicy::Costa:
      return lambda_costa(ch.a + std::sqrt((1 - alpha) * ch.P1 / ch.P2), 1.0, alpha, ch.P1);
    case LambdaPolicy::Zero: return {0, 0};
    case LambdaPolicy::Fixed: return spec.lambda;
  }
  return {0, 0};
}

std::vector<RegionParams> family_params(GRegion region, const ChannelGaussian& ch,
                                        const FamilySpec& spec) {
  std::vector<RegionParams> out;
  switch (region) {
    case GRegion::InTimeDiv: out.emplace_back(std::monostate{}); break;
    case GRegion::OutBcDms: {
      if (spec.bc_alpha_points < 2 || spec.bc_modulus_points < 2 || spec.bc_phase_points < 1)
        throw std::invalid_argument("OUT_BCDMS grid too small");
      const auto al = alpha_grid(spec.bc_alpha_points);
      const auto mod = alpha_grid(spec.bc_modulus_points);
      std::vector<cplx> rho;
      for (double m : mod) {
        for (std::size_t k = 0; k < spec.bc_phase_points; ++k) {
          rho.push_back(std::polar(m, 2 * std::numbers::pi * static_cast<double>(k) /
                                          static_cast<double>(spec.bc_phase_points)));
          if (m == 0) break;
        }
      }
      for (double a1 : al)
        for (double a2 : al)
          for (cplx r1 : rho)
            for (cplx r2 : rho) {
              BcDmsParams p{a1, a2, r1, r2};
              if (p.admissible()) out.emplace_back(p);
            }
      break;
    }
    default: {
      for (double al : alpha_grid(spec.alpha_points)) {
        SchemeParams p;
        p.alpha = al;
        p.sigma2_tilde = spec.sigma2_tilde;
        if (region == GRegion::InBinning) {
          p.lambda = binning_lambda(ch, al, spec);
          const cplx lc = lambda_costa(ch.a + std::sqrt((1 - al) * ch.P1 / ch.P2), 1.0, al, ch.P1);
          if (lc == cplx(0, 0) && p.lambda != cplx(0, 0)) continue;
        }
        out.emplace_back(p);
      }
      break;
    }
  }
  return out;
}

geom::Frontier gaussian_frontier(GRegion region, const ChannelGaussian& ch,
                                 const FamilySpec& spec, const geom::R1Grid& r1) {
  ch.validate();
  const auto params = family_params(region, ch, spec);
  return geom::frontier_from_family(
      [&](const RegionParams& p) { return eval_gaussian_region(region, ch, p); }, params, r1,
      region_name(region));
}

}  // namespace rrk::gauss
