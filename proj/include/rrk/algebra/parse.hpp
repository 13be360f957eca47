// Line-oriented DSL for rate inequality systems.
//
//   atom NAME [signed]
//   let VAR = VAR + VAR ...
//   rel AFFINE >= AFFINE
//   LINCOMB (<=|>=) AFFINE
//
// '#' starts a comment. Identifiers on the left of an inequality must be rate
// variables; atoms on the right that were never declared are taken as
// nonnegative.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrk/algebra/system.hpp"

namespace rrk::algebra {

const std::set<std::string>& default_rate_variables();

struct ParseOptions {
  std::set<std::string> variables = default_rate_variables();
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Document {
  InequalitySystem system;
  std::vector<Definition> definitions;
  std::vector<AtomRelation> relations;
};

Document parse_document(const std::string& text, const ParseOptions& opts = {});
InequalitySystem parse_system(const std::string& text, const ParseOptions& opts = {});
std::vector<AtomRelation> parse_relations(const std::string& text,
                                          const ParseOptions& opts = {});

std::string format_affine(const AffineBound& b);
std::string format_inequality(const RateInequality& r);
std::string format_relation(const AtomRelation& r);
std::string format_definition(const Definition& d);

// Canonical text: atom declarations, definitions, inequalities, relations.
std::string print_document(const Document& doc);
std::string print_system(const InequalitySystem& sys);

std::string read_text_file(const std::string& path);

}  // namespace rrk::algebra
