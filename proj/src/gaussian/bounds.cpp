#include "rrk/gaussian/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rrk::gauss {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Arguments that are variances by construction may come out a few ulps
// below zero.
double cap_nonneg(double x) {
  if (x < 0 && x > -1e-12) x = 0;
  return cap_c(x);
}

double check_alpha(double alpha) {
  if (!(alpha >= 0 && alpha <= 1)) throw std::invalid_argument("alpha must lie in [0, 1]");
  return alpha;
}

// Shared sum-rate term of the Y2 receiver: C(b^2 P1 + P2 + 2 sqrt(abar b^2 P1 P2)).
double y2_sum(const ChannelGaussian& ch, double alpha) {
  const double abar = 1 - alpha;
  return cap_c(ch.b * ch.b * ch.P1 + ch.P2 + 2 * std::sqrt(abar * ch.b * ch.b * ch.P1 * ch.P2));
}

geom::BoundEntry entry(double c1, double c2, double v, std::string src) {
  return {c1, c2, v, std::move(src)};
}

const SchemeParams& scheme(const RegionParams& p, GRegion r) {
  if (const auto* s = std::get_if<SchemeParams>(&p)) {
    s->validate();
    return *s;
  }
  throw std::invalid_argument(region_name(r) + " needs scheme parameters (alpha)");
}

}  // namespace

double cap_c(double x) {
  if (!(x >= 0)) throw std::invalid_argument("cap_c: argument must be >= 0");
  return std::log1p(x) / kLn2;
}

cplx lambda_costa(cplx h, double sigma2, double alpha, double P1) {
  if (!(sigma2 > 0)) throw std::invalid_argument("lambda_costa: sigma2 must be > 0");
  const double aP = alpha * P1;
  return aP / (aP + sigma2) * h;
}

double binning_f(cplx h, double sigma2, cplx lambda, double alpha, double P1, double P2) {
  if (!(sigma2 > 0)) throw std::invalid_argument("binning_f: sigma2 must be > 0");
  const double aP = alpha * P1;
  const cplx lc = lambda_costa(h, sigma2, alpha, P1);
  if (lc == cplx(0, 0)) {
    if (lambda != cplx(0, 0))
      throw std::domain_error("binning_f: lambda must be 0 when lambda_costa is 0");
    return std::log1p(aP / sigma2) / kLn2;
  }
  const double h2 = std::norm(h) * P2;
  const double ratio = std::norm(lambda - lc) / std::norm(lc);
  const double term = aP * h2 / (aP + h2 + sigma2) * ratio;
  // log2((sigma2 + aP) / (sigma2 + term)) without cancellation for small aP
  return std::log1p((aP - term) / (sigma2 + term)) / kLn2;
}

void SchemeParams::validate() const {
  check_alpha(alpha);
  if (!(sigma2_tilde > 0)) throw std::invalid_argument("sigma2_tilde must be > 0");
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
    throw std::invalid_argument("lambda must be finite");
}

bool BcDmsParams::admissible() const {
  if (!(alpha1 >= 0 && alpha1 <= 1 && alpha2 >= 0 && alpha2 <= 1)) return false;
  if (std::abs(rho1) > 1 + 1e-12 || std::abs(rho2) > 1 + 1e-12) return false;
  const cplx c = rho1 * std::sqrt(alpha1 * alpha2) + rho2 * std::sqrt((1 - alpha1) * (1 - alpha2));
  return std::abs(c) <= 1 + 1e-12;
}

void BcDmsParams::validate() const {
  if (!admissible()) throw std::invalid_argument("BC-DMS parameters violate the correlation constraint");
}

const std::vector<GRegion>& all_gaussian_regions() {
  static const std::vector<GRegion> r{GRegion::OutBasic,    GRegion::OutBcDms,
                                      GRegion::InSuperpos,  GRegion::InBinning,
                                      GRegion::InBinningL0, GRegion::InGapScheme,
                                      GRegion::InTimeDiv};
  return r;
}

std::string region_name(GRegion r) {
  switch (r) {
    case GRegion::OutBasic: return "OUT_BASIC";
    case GRegion::OutBcDms: return "OUT_BCDMS";
    case GRegion::InSuperpos: return "IN_SUPERPOS";
    case GRegion::InBinning: return "IN_BINNING";
    case GRegion::InBinningL0: return "IN_BINNING_L0";
    case GRegion::InGapScheme: return "IN_GAPSCHEME";
    case GRegion::InTimeDiv: return "IN_TIMEDIV";
  }
  return "?";
}

std::optional<GRegion> parse_gaussian_region(const std::string& name) {
  for (GRegion r : all_gaussian_regions())
    if (region_name(r) == name) return r;
  return std::nullopt;
}

bool is_outer(GRegion r) { return r == GRegion::OutBasic || r == GRegion::OutBcDms; }

TimeDivCorners timediv_corners(const ChannelGaussian& ch) {
  const double s = ch.b * std::sqrt(ch.P1) + std::sqrt(ch.P2);
  return {cap_c(std::min(1.0, ch.b * ch.b) * ch.P1), cap_c(s * s)};
}

geom::BoundSet eval_gaussian_region(GRegion region, const ChannelGaussian& ch,
                                    const RegionParams& params) {
  ch.validate();
  const double P1 = ch.P1, P2 = ch.P2, b = ch.b, b2 = ch.b * ch.b;
  const cplx a = ch.a;
  geom::BoundSet out;
  auto& e = out.entries;
  switch (region) {
    case GRegion::OutBasic: {
      const double al = scheme(params, region).alpha;
      e.push_back(entry(1, 0, cap_c(al * std::min(1.0, b2) * P1), "OUT_BASIC: R1 <= C(alpha min(1,b^2) P1)"));
      e.push_back(entry(1, 1, y2_sum(ch, al), "OUT_BASIC: R1+R2 <= C(P2 + b^2 P1 + 2 sqrt(abar b^2 P1 P2))"));
      break;
    }
    case GRegion::OutBcDms: {
      const auto* q = std::get_if<BcDmsParams>(&params);
      if (!q) throw std::invalid_argument("OUT_BCDMS needs BC-DMS parameters");
      q->validate();
      const double a1 = q->alpha1, a2 = q->alpha2, ab1 = 1 - a1, ab2 = 1 - a2;
      const double P12 = P1 * P2, al12 = a1 * a2, alb12 = ab1 * ab2;
      const double na = std::norm(a);
      const double num = a1 * P1 + na * a2 * P2 + 2 * (std::conj(a) * q->rho1).real() * std::sqrt(al12 * P12);
      const double den = 1 + ab1 * P1 + na * ab2 * P2 + 2 * (std::conj(a) * q->rho2).real() * std::sqrt(alb12 * P12);
      const double r1 = cap_nonneg(num / den);
      const double y2p = cap_nonneg(ab1 * b2 * P1 + ab2 * P2 + 2 * q->rho2.real() * std::sqrt(alb12 * b2 * P12));
      const cplx mix = q->rho1 * std::sqrt(al12) + q->rho2 * std::sqrt(alb12);
      const double full = cap_nonneg(b2 * P1 + P2 + 2 * mix.real() * std::sqrt(b2 * P12));
      e.push_back(entry(1, 0, r1, "OUT_BCDMS: R1 <= C(Y1 common part)"));
      e.push_back(entry(1, 1, r1 + y2p, "OUT_BCDMS: R1+R2 <= C(Y1 common part) + C(Y2 private part)"));
      e.push_back(entry(1, 1, full, "OUT_BCDMS: R1+R2 <= C(Y2 full)"));
      break;
    }
    case GRegion::InSuperpos: {
      const double al = scheme(params, region).alpha, abar = 1 - al;
      e.push_back(entry(1, 0, cap_c(al * P1), "IN_SUPERPOS: R1 <= C(alpha P1)"));
      e.push_back(entry(1, 0, cap_c(al * b2 * P1), "IN_SUPERPOS: R1 <= C(alpha b^2 P1)"));
      e.push_back(entry(1, 1, cap_nonneg(P1 + std::norm(a) * P2 + 2 * a.real() * std::sqrt(abar * P1 * P2)),
                        "IN_SUPERPOS: R1+R2 <= C(P1 + |a|^2 P2 + 2 Re{a} sqrt(abar P1 P2))"));
      e.push_back(entry(1, 1, y2_sum(ch, al), "IN_SUPERPOS: R1+R2 <= C(b^2 P1 + P2 + 2 sqrt(abar b^2 P1 P2))"));
      break;
    }
    case GRegion::InBinning: {
      const SchemeParams& s = scheme(params, region);
      const double al = s.alpha, abar = 1 - al;
      const double shift = std::sqrt(abar * P1 / P2);
      const double f1 = binning_f(a + shift, 1.0, s.lambda, al, P1, P2);
      double f2;
      if (b > 0) {
        f2 = binning_f(cplx(1 / b + shift, 0), 1 / b2, s.lambda, al, P1, P2);
      } else if (s.lambda == cplx(0, 0)) {
        f2 = 0;  // limit b -> 0
      } else {
        if (!(al * P1 > 0)) throw std::domain_error("binning_f: lambda must be 0 when lambda_costa is 0");
        f2 = -std::log1p(P2 * std::norm(s.lambda) / ((1 + P2) * al * P1)) / kLn2;  // limit b -> 0
      }
      const double y2 = y2_sum(ch, al);
      e.push_back(entry(1, 0, f1, "IN_BINNING: R1 <= f(a + sqrt(abar P1/P2), 1; lambda)"));
      e.push_back(entry(1, 0, cap_c(al * b2 * P1), "IN_BINNING: R1 <= C(alpha b^2 P1)"));
      e.push_back(entry(1, 1, y2 + f1 - f2, "IN_BINNING: R1+R2 <= C(Y2 sum) + f(a + .., 1) - f(1/b + .., 1/b^2)"));
      e.push_back(entry(1, 1, y2, "IN_BINNING: R1+R2 <= C(b^2 P1 + P2 + 2 sqrt(abar b^2 P1 P2))"));
      break;
    }
    case GRegion::InBinningL0: {
      if (!(b > 1)) throw std::invalid_argument("IN_BINNING_L0 requires b > 1");
      const double al = scheme(params, region).alpha, abar = 1 - al;
      const cplx g = std::sqrt(abar * P1) + a * std::sqrt(P2);
      const double r1 = cap_c(al * P1 / (std::norm(g) + 1));
      const double t = b * std::sqrt(abar * P1) + std::sqrt(P2);
      e.push_back(entry(1, 0, r1, "IN_BINNING_L0: R1 <= C(alpha P1 / (|sqrt(abar P1) + a sqrt(P2)|^2 + 1))"));
      e.push_back(entry(1, 1, r1 + cap_c(t * t), "IN_BINNING_L0: R1+R2 <= R1 bound + C((b sqrt(abar P1) + sqrt(P2))^2)"));
      e.push_back(entry(1, 1, y2_sum(ch, al), "IN_BINNING_L0: R1+R2 <= C(b^2 P1 + P2 + 2 sqrt(abar b^2 P1 P2))"));
      break;
    }
    case GRegion::InGapScheme: {
      const SchemeParams& s = scheme(params, region);
      const double al = s.alpha;
      const GapTerms g = gap_terms(ch, al, s.sigma2_tilde);
      const double y2 = y2_sum(ch, al);
      e.push_back(entry(1, 0, std::log2(s.sigma2_tilde + al * P1) - g.gap1,
                        "IN_GAPSCHEME: R1 <= log2(s + alpha P1) - GAP1"));
      e.push_back(entry(1, 0, cap_c(al * b2 * P1), "IN_GAPSCHEME: R1 <= C(alpha b^2 P1)"));
      e.push_back(entry(1, 1, y2, "IN_GAPSCHEME: R1+R2 <= C(P2 + b^2 P1 + 2 sqrt(abar b^2 P1 P2))"));
      e.push_back(entry(1, 1, y2 - g.gap2, "IN_GAPSCHEME: R1+R2 <= C(P2 + b^2 P1 + ..) - GAP2"));
      break;
    }
    case GRegion::InTimeDiv: {
      if (!std::holds_alternative<std::monostate>(params))
        throw std::invalid_argument("IN_TIMEDIV takes no parameters");
      const TimeDivCorners c = timediv_corners(ch);
      e.push_back(entry(1, 0, c.r1, "IN_TIMEDIV: R1 <= R1*"));
      if (c.r1 > 0) {
        // Segment from (R1*, 0) to (0, R2*): R2* R1 + R1* R2 <= R1* R2*.
        e.push_back(entry(c.r2, c.r1, c.r1 * c.r2, "IN_TIMEDIV: R2* R1 + R1* R2 <= R1* R2*"));
      } else {
        e.push_back(entry(0, 1, c.r2, "IN_TIMEDIV: R2 <= R2*"));
      }
      break;
    }
  }
  return out;
}

VsiResult vsi_gaussian(const ChannelGaussian& ch) {
  const double slack = (std::norm(ch.a) - 1) * ch.P2 - (ch.b * ch.b - 1) * ch.P1 -
                       2 * std::abs(ch.a - ch.b) * std::sqrt(ch.P1 * ch.P2);
  return {slack >= 0, slack};
}

PdcResult pdc_gaussian(const ChannelGaussian& ch) {
  const double P1 = ch.P1, P2 = ch.P2, b2 = ch.b * ch.b, na = std::norm(ch.a);
  const double d = std::norm(1.0 - ch.a * ch.b);
  const double lhs = P2 * d;
  const double rhs_a = (b2 - 1) * (1 + P1 + na * P2) - P1 * P2 * d;
  const double rhs_b = (b2 - 1) * (1 + P1 + na * P2 + 2 * ch.a.real() * std::sqrt(P1 * P2));
  PdcResult r;
  r.slack_a = lhs - rhs_a;
  r.slack_b = lhs - rhs_b;
  r.holds = r.slack_a >= 0 && r.slack_b >= 0;
  return r;
}

GapTerms gap_terms(const ChannelGaussian& ch, double alpha, double sigma2_tilde) {
  check_alpha(alpha);
  if (!(sigma2_tilde > 0)) throw std::invalid_argument("sigma2_tilde must be > 0");
  const double P1 = ch.P1, P2 = ch.P2, b = ch.b;
  const cplx a = ch.a;
  const double c = std::sqrt((1 - alpha) * P1 * P2);  // E[X1 X2]
  const double V = P1 + std::norm(a) * P2 + 2 * a.real() * c;
  GapTerms g;
  g.gap1 = std::log2(sigma2_tilde + V / (1 + V));
  // Var[U1c | Y2] with Y2 = b X1 + X2 + Z2.
  const cplx cov = b * P1 + c + a * (b * c + P2);
  const double var_y2 = b * b * P1 + P2 + 2 * b * c + 1;
  const double cond = V + sigma2_tilde - std::norm(cov) / var_y2;
  g.gap2 = g.gap1 - std::log2(cond);
  return g;
}

}  // namespace rrk::gauss
