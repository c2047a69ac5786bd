#pragma once

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "minkhad/matrix.hpp"
#include "minkhad/polynomial.hpp"

namespace minkhad {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

/// Recursive-descent polynomial parser. Grammar: signed integer or p/q
/// coefficients, declared variable names, operators + - * ^, parentheses;
/// `*` is optional between adjacent factors; whitespace insignificant.
class PolynomialParser {
 public:
  PolynomialParser(std::string text, RingPtr ring, MonomialOrder order, int line = 1)
      : text_(std::move(text)), ring_(std::move(ring)), order_(order), line_(line) {
    for (std::size_t i = 0; i < ring_->nvars(); ++i) vars_[ring_->names[i]] = i;
  }

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  Polynomial expression() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (take() == '-');
    Polynomial p = term();
    if (neg) p = -p;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return p;
      take();
      Polynomial t = term();
      p = (c == '+') ? p + t : p - t;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        take();
        p = p * factor();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
        p = p * factor();  // implicit multiplication
      } else {
        return p;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = atom();
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      if (peek() == '-') fail("exponent must be nonnegative");
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      return base.pow(static_cast<std::uint32_t>(integer().get_ui()));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      take();
      Polynomial p = expression();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      take();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (peek() == '/') {
        take();
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      Scalar s = Scalar::of(mpq_class(num, den), ring_->field);
      return Polynomial::constant(ring_, order_, s);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = identifier();
      auto it = vars_.find(name);
      if (it == vars_.end()) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, order_, it->second);
    }
    fail("unexpected character");
    return Polynomial::zero(ring_, order_);  // unreachable
  }

  mpz_class integer() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(take());
    return mpz_class(digits);
  }

  std::string identifier() {
    std::string s;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') s.push_back(take());
    return s;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
  }

  std::string text_;
  RingPtr ring_;
  MonomialOrder order_;
  int line_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::size_t> vars_;
};

inline Polynomial parse_polynomial(const std::string& text, const RingPtr& ring,
                                   MonomialOrder order = MonomialOrder::Grevlex()) {
  return PolynomialParser(text, ring, order).parse();
}

/// Re-reads every coefficient into the given field; only rational -> F_p and
/// identity conversions exist.
inline Polynomial change_field(const Polynomial& p, FieldSpec f) {
  if (p.ring()->field == f) return p;
  if (!p.ring()->field.rational())
    throw std::invalid_argument("cannot convert prime-field coefficients");
  RingPtr target = Ring::make(p.ring()->names, f);
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (auto& t : p.terms()) terms.push_back(Term{Scalar::of(t.c.rational_value(), f), t.m});
  return Polynomial::from_terms(target, p.order(), std::move(terms));
}

/// On-disk ideal format:
///   ring n <count> vars x1..xn [projective]
///   field q | fp <prime>
///   one generator polynomial per following line
/// Blank lines and lines starting with '#' are skipped.
struct IdealFileData {
  bool projective = false;
  std::size_t n = 0;  // ambient dimension
  RingPtr ring;
  std::vector<Polynomial> gens;
};

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

/// Accepts either the shorthand `x1..x3` or explicit names.
inline std::vector<std::string> parse_var_tokens(const std::vector<std::string>& toks,
                                                 int line) {
  std::vector<std::string> names;
  for (auto& t : toks) {
    auto dots = t.find("..");
    if (dots == std::string::npos) {
      names.push_back(t);
      continue;
    }
    std::string a = t.substr(0, dots), b = t.substr(dots + 2);
    std::size_t i = 0;
    while (i < a.size() && !std::isdigit(static_cast<unsigned char>(a[i]))) ++i;
    std::string stem = a.substr(0, i);
    if (stem.empty() || b.substr(0, stem.size()) != stem)
      throw ParseError("bad variable range '" + t + "'", line, 1);
    long lo = std::stol(a.substr(i)), hi = std::stol(b.substr(stem.size()));
    for (long k = lo; k <= hi; ++k) names.push_back(stem + std::to_string(k));
  }
  return names;
}

}  // namespace detail

inline IdealFileData read_ideal_file(std::istream& in,
                                     MonomialOrder order = MonomialOrder::Grevlex()) {
  std::string line;
  int lineno = 0;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_content_line(header)) throw ParseError("missing ring header", lineno, 1);
  auto toks = detail::split_tokens(header);
  if (toks.size() < 4 || toks[0] != "ring" || toks[1] != "n" || toks[3] != "vars")
    throw ParseError("expected 'ring n <count> vars ...'", lineno, 1);
  IdealFileData data;
  data.n = std::stoul(toks[2]);
  std::vector<std::string> var_toks(toks.begin() + 4, toks.end());
  if (!var_toks.empty() && var_toks.back() == "projective") {
    data.projective = true;
    var_toks.pop_back();
  }
  std::vector<std::string> names = detail::parse_var_tokens(var_toks, lineno);
  std::size_t expected = data.projective ? data.n + 1 : data.n;
  if (names.size() != expected)
    throw ParseError("ring declares " + std::to_string(expected) + " variables, got " +
                         std::to_string(names.size()),
                     lineno, 1);

  std::string field_line;
  if (!next_content_line(field_line)) throw ParseError("missing field line", lineno, 1);
  auto ftoks = detail::split_tokens(field_line);
  FieldSpec field;
  if (ftoks.size() == 2 && ftoks[0] == "field" && ftoks[1] == "q")
    field = FieldSpec::q();
  else if (ftoks.size() == 3 && ftoks[0] == "field" && ftoks[1] == "fp")
    field = FieldSpec::fp(std::stoull(ftoks[2]));
  else
    throw ParseError("expected 'field q' or 'field fp <prime>'", lineno, 1);

  data.ring = Ring::make(std::move(names), field);
  std::string body;
  while (next_content_line(body))
    data.gens.push_back(PolynomialParser(body, data.ring, order, lineno).parse());
  return data;
}

/// Matrix literal: rows separated by ';', entries by ',', each entry a
/// (signed) integer or p/q rational. Example: "1,2,0;0,1/2,-3".
inline Matrix parse_matrix(const std::string& text, FieldSpec field) {
  std::vector<std::vector<Scalar>> rows;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("matrix literal: " + msg, 1, static_cast<int>(pos) + 1);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto integer = [&]() -> mpz_class {
    std::string digits;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) digits.push_back(text[pos++]);
    std::size_t start = digits.size();
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits.push_back(text[pos++]);
    if (digits.size() == start) fail("expected number");
    return mpz_class(digits);
  };

  rows.emplace_back();
  for (;;) {
    skip_ws();
    mpz_class num = integer();
    mpz_class den = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      skip_ws();
      den = integer();
      if (den == 0) fail("zero denominator");
      skip_ws();
    }
    rows.back().push_back(Scalar::of(mpq_class(num, den), field));
    if (pos == text.size()) break;
    if (text[pos] == ',') {
      ++pos;
    } else if (text[pos] == ';') {
      ++pos;
      rows.emplace_back();
    } else {
      fail("expected ',' or ';'");
    }
  }
  std::size_t cols = rows[0].size();
  for (auto& r : rows)
    if (r.size() != cols) throw ParseError("matrix literal: ragged rows", 1, 1);
  Matrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

inline void write_ideal_file(std::ostream& out, const IdealFileData& data) {
  const Ring& ring = *data.ring;
  out << "ring n " << data.n << " vars ";
  // Prefer the range shorthand when the names are a consecutive run.
  bool run = true;
  std::string stem;
  long first = 0;
  for (std::size_t i = 0; i < ring.names.size() && run; ++i) {
    const std::string& nm = ring.names[i];
    std::size_t d = 0;
    while (d < nm.size() && !std::isdigit(static_cast<unsigned char>(nm[d]))) ++d;
    if (d == 0 || d == nm.size()) {
      run = false;
      break;
    }
    long idx = std::stol(nm.substr(d));
    if (i == 0) {
      stem = nm.substr(0, d);
      first = idx;
    } else if (nm.substr(0, d) != stem || idx != first + static_cast<long>(i)) {
      run = false;
    }
  }
  if (run && !ring.names.empty()) {
    out << stem << first << ".." << stem << (first + static_cast<long>(ring.names.size()) - 1);
  } else {
    for (std::size_t i = 0; i < ring.names.size(); ++i) out << (i ? " " : "") << ring.names[i];
  }
  if (data.projective) out << " projective";
  out << "\n";
  if (ring.field.rational())
    out << "field q\n";
  else
    out << "field fp " << ring.field.p << "\n";
  for (auto& g : data.gens) out << g.str() << "\n";
}

}  // namespace minkhad
