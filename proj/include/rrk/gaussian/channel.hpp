// Y1 = X1 + a X2 + Z1,  Y2 = b X1 + X2 + Z2,  unit-variance noise.
#pragma once

#include <complex>
#include <string>

namespace rrk::gauss {

using cplx = std::complex<double>;

struct ChannelGaussian {
  cplx a{0, 0};
  double b = 0;  // >= 0
  double P1 = 1;
  double P2 = 1;

  // Throws std::invalid_argument when b < 0, a power is not positive, or a
  // value is not finite.
  void validate() const;
};

// "a=RE[+IMi],b=B,P1=...,P2=..." in any order; a also accepts "IMi" and
// "RE-IMi". Missing keys are an error.
ChannelGaussian parse_channel(const std::string& spec);
std::string format_channel(const ChannelGaussian& ch);

cplx parse_complex(const std::string& text);
std::string format_complex(cplx z);

}  // namespace rrk::gauss
