#include "rrk/gaussian/channel.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rrk::gauss {

void ChannelGaussian::validate() const {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
    throw std::invalid_argument("channel: a must be finite");
  if (!(b >= 0) || !std::isfinite(b)) throw std::invalid_argument("channel: b must be a finite real >= 0");
  if (!(P1 > 0) || !std::isfinite(P1)) throw std::invalid_argument("channel: P1 must be > 0");
  if (!(P2 > 0) || !std::isfinite(P2)) throw std::invalid_argument("channel: P2 must be > 0");
}

namespace {

// Reads one real number covering all of [s, e); throws otherwise.
double parse_real(const std::string& s, const std::string& what) {
  if (s.empty()) throw std::invalid_argument("missing value for " + what);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw std::invalid_argument("malformed number '" + s + "' for " + what);
  return v;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

cplx parse_complex(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty complex number");
  const char* begin = s.c_str();
  char* end = nullptr;
  if (s.back() != 'i') return {parse_real(s, "complex number"), 0.0};
  // Pure imaginary: "2i", "-i", "i".
  std::string body = s.substr(0, s.size() - 1);
  double re = std::strtod(begin, &end);
  std::size_t used = static_cast<std::size_t>(end - begin);
  if (used == 0 || used == body.size()) {
    if (body.empty() || body == "+") return {0, 1};
    if (body == "-") return {0, -1};
    return {0, parse_real(body, "imaginary part")};
  }
  std::string rest = body.substr(used);
  if (rest != "+" && rest != "-" && rest[0] != '+' && rest[0] != '-')
    throw std::invalid_argument("malformed complex number '" + s + "'");
  double im;
  if (rest == "+") {
    im = 1;
  } else if (rest == "-") {
    im = -1;
  } else {
    im = parse_real(rest, "imaginary part");
  }
  return {re, im};
}

std::string format_complex(cplx z) {
  char buf[64];
  if (z.imag() == 0) {
    std::snprintf(buf, sizeof buf, "%.12g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  }
  return buf;
}

ChannelGaussian parse_channel(const std::string& spec) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("channel spec: expected key=value, got '" + item + "'");
    std::string key = trim(item.substr(0, eq));
    if (key != "a" && key != "b" && key != "P1" && key != "P2")
      throw std::invalid_argument("channel spec: unknown key '" + key + "'");
    if (!kv.emplace(key, trim(item.substr(eq + 1))).second)
      throw std::invalid_argument("channel spec: repeated key '" + key + "'");
  }
  for (const char* k : {"a", "b", "P1", "P2"})
    if (!kv.count(k)) throw std::invalid_argument(std::string("channel spec: missing '") + k + "'");
  ChannelGaussian ch;
  ch.a = parse_complex(kv["a"]);
  if (kv["b"].find('i') != std::string::npos)
    throw std::invalid_argument("channel spec: b must be a nonnegative real");
  ch.b = parse_real(kv["b"], "b");
  ch.P1 = parse_real(kv["P1"], "P1");
  ch.P2 = parse_real(kv["P2"], "P2");
  ch.validate();
  return ch;
}

std::string format_channel(const ChannelGaussian& ch) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "a=%s,b=%.12g,P1=%.12g,P2=%.12g", format_complex(ch.a).c_str(),
                ch.b, ch.P1, ch.P2);
  return buf;
}

}  // namespace rrk::gauss
