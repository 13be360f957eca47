#include "rrk/algebra/atom.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rrk::algebra {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_group(const std::string& g) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(cur);
    cur.clear();
  };
  for (char ch : g) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'') {
      cur += ch;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + ch +
                                  "' in information expression");
    }
  }
  flush();
  if (out.empty()) throw std::invalid_argument("empty variable group");
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("repeated variable in group");
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i];
  }
  return s;
}

}  // namespace

bool looks_like_info_atom(const std::string& text) {
  auto t = trim(text);
  return t.size() >= 3 && (t[0] == 'I' || t[0] == 'H') && t[1] == '(';
}

InfoAtom parse_info_atom(const std::string& text) {
  auto t = trim(text);
  if (!looks_like_info_atom(t) || t.back() != ')')
    throw std::invalid_argument("not an information expression: '" + text + "'");
  InfoAtom a;
  a.kind = t[0];
  std::string body = t.substr(2, t.size() - 3);
  std::string cond;
  if (auto bar = body.find('|'); bar != std::string::npos) {
    cond = body.substr(bar + 1);
    body = body.substr(0, bar);
    if (cond.find('|') != std::string::npos)
      throw std::invalid_argument("more than one '|' in '" + text + "'");
    a.given = split_group(cond);
  }
  std::size_t start = 0;
  for (;;) {
    auto semi = body.find(';', start);
    a.groups.push_back(split_group(body.substr(start, semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  std::size_t want = a.kind == 'I' ? 2 : 1;
  if (a.groups.size() != want)
    throw std::invalid_argument(std::string(a.kind == 'I' ? "I(...)" : "H(...)") +
                                " needs " + std::to_string(want) + " argument group(s)");
  return a;
}

std::string InfoAtom::str() const {
  std::string s(1, kind);
  s += '(';
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) s += ';';
    s += join(groups[i]);
  }
  if (!given.empty()) s += '|' + join(given);
  s += ')';
  return s;
}

std::string canonical_atom_name(const std::string& text) {
  if (looks_like_info_atom(text)) return parse_info_atom(text).str();
  return trim(text);
}

}  // namespace rrk::algebra
