#pragma once

#include <string>
#include <vector>

namespace rrk::algebra {

// Structured form of "I(A;B,C|D)" or "H(A|B)".
struct InfoAtom {
  char kind = 'I';                               // 'I' or 'H'
  std::vector<std::vector<std::string>> groups;  // two for I, one for H
  std::vector<std::string> given;

  std::string str() const;
};

// Parses an information expression; variables inside a group may be separated
// by commas or whitespace. Throws std::invalid_argument on malformed input.
InfoAtom parse_info_atom(const std::string& text);

// Returns the canonical spelling (sorted variables per group, no spaces) for
// information expressions and the trimmed text for plain identifiers.
std::string canonical_atom_name(const std::string& text);

bool looks_like_info_atom(const std::string& text);

}  // namespace rrk::algebra
