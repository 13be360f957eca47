#include "rrk/algebra/parse.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "rrk/algebra/atom.hpp"

namespace rrk::algebra {

const std::set<std::string>& default_rate_variables() {
  static const std::set<std::string> vars = {
      "R1",   "R2",   "R2c",  "R1c",   "Rp1c",  "R2p",
      "R2pb", "D2p1", "D2p2", "D2pb1", "D2pb2", "D2c1"};
  return vars;
}

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Info, Number, Plus, Minus, Star, Slash, Le, Ge, Eq, End };

struct Token {
  Tok kind;
  std::string text;
  int col;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if ((c == 'I' || c == 'H') && i + 1 < line.size() && line[i + 1] == '(') {
      auto close = line.find(')', i + 2);
      auto open2 = line.find('(', i + 2);
      if (close == std::string::npos || (open2 != std::string::npos && open2 < close))
        throw ParseError(lineno, col + 1, "unclosed argument list");
      std::string raw = line.substr(i, close - i + 1);
      try {
        out.push_back({Tok::Info, canonical_atom_name(raw), col});
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, col, e.what());
      }
      i = close + 1;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      bool dot = false;
      while (j < line.size() &&
             (std::isdigit(static_cast<unsigned char>(line[j])) || (line[j] == '.' && !dot))) {
        if (line[j] == '.') dot = true;
        ++j;
      }
      std::string num = line.substr(i, j - i);
      if (num == ".") throw ParseError(lineno, col, "malformed number");
      out.push_back({Tok::Number, num, col});
      i = j;
      continue;
    }
    if (c == '<' || c == '>') {
      if (i + 1 >= line.size() || line[i + 1] != '=')
        throw ParseError(lineno, col, std::string("expected '") + c + "='");
      out.push_back({c == '<' ? Tok::Le : Tok::Ge, line.substr(i, 2), col});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '=': k = Tok::Eq; break;
      default:
        throw ParseError(lineno, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

Rational decimal_to_rational(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(mpz_class(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  if (digits.empty()) digits = "0";
  mpz_class num(digits);
  mpz_class den = 1;
  for (std::size_t k = dot + 1; k < s.size(); ++k) den *= 10;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int lineno, const ParseOptions& opts)
      : t_(std::move(toks)), line_(lineno), opts_(opts) {}

  const Token& peek() const { return t_[pos_]; }
  Token take() { return t_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, peek().col, msg);
  }
  [[noreturn]] void fail_at(const Token& tok, const std::string& msg) const {
    throw ParseError(line_, tok.col, msg);
  }

  void expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    ++pos_;
  }
  void expect_end() {
    if (!at(Tok::End)) fail("unexpected '" + peek().text + "'");
  }

  // number ['/' number]
  Rational rational() {
    Token n = take();
    Rational q = decimal_to_rational(n.text);
    if (at(Tok::Slash)) {
      ++pos_;
      if (!at(Tok::Number)) fail("expected denominator");
      Token d = take();
      Rational den = decimal_to_rational(d.text);
      if (den == 0) fail_at(d, "zero denominator");
      q /= den;
    }
    return q;
  }

  LinearForm lincomb() {
    LinearForm f;
    if (at(Tok::Number) && peek().text == "0" && t_[pos_ + 1].kind != Tok::Star &&
        t_[pos_ + 1].kind != Tok::Slash) {
      ++pos_;
      return f;
    }
    int sign = 1;
    if (at(Tok::Minus)) {
      sign = -1;
      ++pos_;
    } else if (at(Tok::Plus)) {
      ++pos_;
    }
    for (;;) {
      Rational k = sign;
      if (at(Tok::Number)) {
        k *= rational();
        expect(Tok::Star, "'*' after coefficient");
      }
      if (!at(Tok::Ident)) fail("expected rate variable");
      Token v = take();
      if (!opts_.variables.count(v.text)) fail_at(v, "unknown variable '" + v.text + "'");
      add_scaled(f, LinearForm{{v.text, 1}}, k);
      if (at(Tok::Plus)) {
        sign = 1;
      } else if (at(Tok::Minus)) {
        sign = -1;
      } else {
        break;
      }
      ++pos_;
    }
    return f;
  }

  std::string atom_name() {
    if (at(Tok::Info)) return take().text;
    if (at(Tok::Ident)) {
      Token a = take();
      if (opts_.variables.count(a.text))
        fail_at(a, "rate variable '" + a.text + "' on the bound side");
      return a.text;
    }
    fail("expected information atom");
  }

  AffineBound affine() {
    AffineBound b;
    int sign = 1;
    if (at(Tok::Minus)) {
      sign = -1;
      ++pos_;
    } else if (at(Tok::Plus)) {
      ++pos_;
    }
    for (;;) {
      if (at(Tok::Number)) {
        Rational k = rational();
        if (at(Tok::Star)) {
          ++pos_;
          add_scaled(b.terms, LinearForm{{atom_name(), 1}}, sign * k);
        } else {
          b.constant += sign * k;
        }
      } else if (at(Tok::Ident) || at(Tok::Info)) {
        add_scaled(b.terms, LinearForm{{atom_name(), 1}}, sign);
      } else {
        fail("expected term");
      }
      if (at(Tok::Plus)) {
        sign = 1;
      } else if (at(Tok::Minus)) {
        sign = -1;
      } else {
        break;
      }
      ++pos_;
    }
    return b;
  }

  std::string variable() {
    if (!at(Tok::Ident)) fail("expected rate variable");
    Token v = take();
    if (!opts_.variables.count(v.text)) fail_at(v, "unknown variable '" + v.text + "'");
    return v.text;
  }

  std::size_t pos_ = 0;

 private:
  std::vector<Token> t_;
  int line_;
  const ParseOptions& opts_;
};

}  // namespace

Document parse_document(const std::string& text, const ParseOptions& opts) {
  Document doc;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto toks = lex(raw, lineno);
    if (toks.front().kind == Tok::End) continue;
    LineParser p(std::move(toks), lineno, opts);

    const Token& head = p.peek();
    if (head.kind == Tok::Ident && head.text == "atom") {
      p.take();
      std::string name;
      if (p.at(Tok::Info) || p.at(Tok::Ident)) {
        Token a = p.take();
        if (a.kind == Tok::Ident && opts.variables.count(a.text))
          p.fail_at(a, "rate variable '" + a.text + "' declared as atom");
        name = a.text;
      } else {
        p.fail("expected atom name");
      }
      bool nonneg = true;
      if (p.at(Tok::Ident) && p.peek().text == "signed") {
        p.take();
        nonneg = false;
      }
      p.expect_end();
      try {
        doc.system.atoms.declare(name, nonneg);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, head.col, e.what());
      }
    } else if (head.kind == Tok::Ident && head.text == "let") {
      p.take();
      Definition d;
      d.var = p.variable();
      p.expect(Tok::Eq, "'='");
      d.summands.push_back(p.variable());
      while (p.at(Tok::Plus)) {
        p.take();
        d.summands.push_back(p.variable());
      }
      p.expect_end();
      doc.definitions.push_back(std::move(d));
    } else if (head.kind == Tok::Ident && head.text == "rel") {
      p.take();
      AtomRelation r;
      r.dominant = p.affine();
      p.expect(Tok::Ge, "'>='");
      r.dominated = p.affine();
      p.expect_end();
      doc.relations.push_back(std::move(r));
    } else {
      RateInequality r;
      r.lhs = p.lincomb();
      bool ge = false;
      if (p.at(Tok::Ge)) {
        ge = true;
      } else if (!p.at(Tok::Le)) {
        p.fail("expected '<=' or '>='");
      }
      p.take();
      r.rhs = p.affine();
      p.expect_end();
      if (ge) {
        for (auto& [v, c] : r.lhs) c = -c;
        r.rhs *= -1;
      }
      doc.system.inequalities.push_back(normalize(std::move(r)));
    }
  }
  register_atoms(doc.system);
  for (const auto& r : doc.relations) {
    for (const auto* b : {&r.dominant, &r.dominated})
      for (const auto& [n, c] : b->terms)
        if (!doc.system.atoms.contains(n)) doc.system.atoms.declare(n, true);
  }
  return doc;
}

InequalitySystem parse_system(const std::string& text, const ParseOptions& opts) {
  return parse_document(text, opts).system;
}

std::vector<AtomRelation> parse_relations(const std::string& text, const ParseOptions& opts) {
  return parse_document(text, opts).relations;
}

namespace {

std::string coef_prefix(const Rational& c, bool first) {
  std::string s;
  Rational a = abs(c);
  if (first) {
    if (c < 0) s = "-";
  } else {
    s = c < 0 ? " - " : " + ";
  }
  if (a != 1) s += a.get_str() + "*";
  return s;
}

std::string format_form(const LinearForm& f) {
  if (f.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [v, c] : f) {
    s += coef_prefix(c, first) + v;
    first = false;
  }
  return s;
}

// Let-form: v - s1 - s2 ... == 0 with unit coefficients.
std::optional<Definition> as_definition(const LinearEquality& e) {
  if (!e.rhs.terms.empty() || e.rhs.constant != 0 || e.lhs.size() < 2) return std::nullopt;
  int pos = 0;
  Definition d;
  for (const auto& [v, c] : e.lhs) {
    if (c == 1) {
      ++pos;
      d.var = v;
    } else if (c == -1) {
      d.summands.push_back(v);
    } else {
      return std::nullopt;
    }
  }
  if (pos != 1) return std::nullopt;
  return d;
}

}  // namespace

std::string format_affine(const AffineBound& b) {
  // Positive terms first so that bounds read "A + B - C".
  std::string s;
  bool first = true;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& [n, c] : b.terms) {
      if ((c > 0) != (pass == 0)) continue;
      s += coef_prefix(c, first) + n;
      first = false;
    }
  }
  if (b.constant != 0 || first) {
    if (first) {
      s += b.constant.get_str();
    } else {
      s += (b.constant < 0 ? " - " : " + ") + Rational(abs(b.constant)).get_str();
    }
  }
  return s;
}

std::string format_inequality(const RateInequality& r) {
  bool all_neg = !r.lhs.empty();
  for (const auto& [v, c] : r.lhs)
    if (c > 0) all_neg = false;
  if (all_neg) {
    LinearForm l = r.lhs;
    for (auto& [v, c] : l) c = -c;
    return format_form(l) + " >= " + format_affine(-1 * r.rhs);
  }
  return format_form(r.lhs) + " <= " + format_affine(r.rhs);
}

std::string format_relation(const AtomRelation& r) {
  return "rel " + format_affine(r.dominant) + " >= " + format_affine(r.dominated);
}

std::string format_definition(const Definition& d) {
  std::string s = "let " + d.var + " =";
  for (std::size_t i = 0; i < d.summands.size(); ++i)
    s += (i ? " + " : " ") + d.summands[i];
  return s;
}

std::string print_document(const Document& doc) {
  std::string out;
  for (const auto& a : doc.system.atoms.list())
    out += "atom " + a.name + (a.nonneg ? "" : " signed") + "\n";
  for (const auto& d : doc.definitions) out += format_definition(d) + "\n";
  for (const auto& e : doc.system.equalities) {
    if (auto d = as_definition(e)) {
      out += format_definition(*d) + "\n";
    } else {
      out += format_inequality({e.lhs, e.rhs}) + "\n";
      LinearForm neg = e.lhs;
      for (auto& [v, c] : neg) c = -c;
      out += format_inequality({neg, -1 * e.rhs}) + "\n";
    }
  }
  for (const auto& r : doc.system.inequalities) out += format_inequality(r) + "\n";
  for (const auto& r : doc.relations) out += format_relation(r) + "\n";
  return out;
}

std::string print_system(const InequalitySystem& sys) {
  Document d;
  d.system = sys;
  return print_document(d);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace rrk::algebra
