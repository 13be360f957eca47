#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace rrk::cli {

// Thrown for results that are computed correctly but fail the requested
// check (e.g. a projection that does not match --expect).
struct CheckFailed {
  nlohmann::json result;
};

struct Outputs {
  std::optional<std::string> out;
  std::optional<std::string> svg;
};

struct BoundsOptions {
  std::string channel;
  std::vector<std::string> regions{"OUT_BASIC"};
  double alpha = 1;
  std::string lambda = "costa";
  double sigma2 = 1;
  double alpha1 = 0, alpha2 = 0;
  std::string rho1 = "0", rho2 = "0";
};

struct FrontierOptions {
  std::string channel;
  std::vector<std::string> regions{"OUT_BASIC"};
  std::size_t alpha_points = 1001;
  std::size_t r1_samples = 201;
  std::string lambda = "costa";
  double sigma2 = 1;
  bool envelope = false;
  std::size_t bc_alpha = 11, bc_modulus = 6, bc_phase = 4;
  Outputs io;
};

struct RegimeOptions {
  double P1 = 10, P2 = 10;
  std::string a_range = "0:5", b_range = "0:5";
  std::size_t res = 101;
  Outputs io;
};

struct GapOptions {
  std::string channel;
  std::string outer = "OUT_BASIC";
  std::vector<std::string> inner{"IN_GAPSCHEME"};
  std::size_t alpha_points = 1001;
  std::size_t r1_samples = 201;
  std::string lambda = "costa";
  double sigma2 = 1;
  bool envelope = false;
  Outputs io;
};

struct FmeOptions {
  std::string input;
  std::vector<std::string> eliminate;
  std::vector<std::string> set_zero;
  std::vector<std::string> subst;
  std::vector<std::string> relations;
  std::optional<std::string> expect;
  bool no_reduce = false;
  std::size_t certificate_samples = 100;
  std::size_t oracle_samples = 0;
  std::uint64_t seed = 1;
  Outputs io;
};

struct DmOptions {
  std::string channel;
  std::optional<std::string> dist;
  std::vector<std::string> regions;
  std::vector<std::string> conditions;
  bool frontier = false;
  double step = 0.1;
  std::size_t budget = 2'000'000;
  int aux_size = 0;
  std::size_t r1_samples = 201;
  Outputs io;
};

nlohmann::json cmd_bounds(const BoundsOptions& o);
nlohmann::json cmd_frontier(const FrontierOptions& o, std::vector<std::string>& written);
nlohmann::json cmd_regimes(const RegimeOptions& o, std::vector<std::string>& written);
nlohmann::json cmd_gap(const GapOptions& o, std::vector<std::string>& written);
nlohmann::json cmd_fme(const FmeOptions& o, std::vector<std::string>& written);
nlohmann::json cmd_dm(const DmOptions& o, std::vector<std::string>& written);

// Writes to a sibling temporary file and renames it into place.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace rrk::cli
