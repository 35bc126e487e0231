#include "closure/document.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace closure {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  InputDocument document(const MonomialOrder& order) {
    keyword("ring");
    Field field = parse_field();
    expect('[', "'['");
    std::vector<std::string> vars;
    for (;;) {
      skip();
      std::size_t line = line_, column = column_;
      std::string name = ident("variable name");
      if (std::find(vars.begin(), vars.end(), name) != vars.end()) {
        throw SyntaxError(line, column, "distinct variable name", "'" + name + "'");
      }
      vars.push_back(std::move(name));
      if (!accept(',')) break;
    }
    expect(']', "',' or ']'");
    expect(';', "';'");

    InputDocument doc{PolyRing::make(field, vars, order), {}};
    keyword("ideal");
    expect('(', "'('");
    for (;;) {
      doc.generators.push_back(poly(doc.ring));
      if (!accept(',')) break;
    }
    expect(')', "',' or ')'");
    expect(';', "';'");
    end();
    return doc;
  }

  Polynomial poly(const RingPtr& ring) {
    Polynomial sum(ring);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    for (;;) {
      Polynomial t = term(ring);
      sum = negate ? sum - t : sum + t;
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return sum;
      }
    }
  }

  void end() {
    skip();
    if (pos_ < text_.size()) fail("end of input");
  }

 private:
  Field parse_field() {
    skip();
    std::size_t line = line_, column = column_;
    std::string name = ident("'QQ' or 'GF'");
    if (name == "QQ") return Field::rationals();
    if (name != "GF") throw SyntaxError(line, column, "'QQ' or 'GF'", "'" + name + "'");
    expect('(', "'('");
    skip();
    mpz_class p = integer();
    expect(')', "')'");
    if (p > mpz_class("18446744073709551615")) throw NonPrimeModulus(p.get_str());
    std::uint64_t value = 0;
    mpz_export(&value, nullptr, -1, sizeof value, 0, 0, p.get_mpz_t());
    return Field::prime(value);
  }

  Polynomial term(const RingPtr& ring) {
    skip();
    Polynomial coeff = Polynomial::constant(ring, 1);
    bool need_factor = true;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coeff = Polynomial::constant(ring, ring->field().from_integer(integer()));
      if (!accept('*')) {
        skip();
        need_factor = pos_ < text_.size() && ident_start(text_[pos_]);
      }
    }
    Polynomial product = coeff;
    if (!need_factor) return product;
    for (;;) {
      product *= factor(ring);
      if (!accept('*')) return product;
    }
  }

  Polynomial factor(const RingPtr& ring) {
    skip();
    std::size_t line = line_, column = column_;
    std::string name = ident("variable or integer");
    auto index = ring->index_of(name);
    if (!index) {
      throw UnknownVariable(name + " at line " + std::to_string(line) + ", column " + std::to_string(column));
    }
    Polynomial v = Polynomial::variable(ring, *index);
    if (!accept('^')) return v;
    skip();
    std::size_t eline = line_, ecolumn = column_;
    mpz_class e = integer();
    if (e > 1000000) throw SyntaxError(eline, ecolumn, "exponent at most 1000000", e.get_str());
    return v.pow(static_cast<unsigned>(e.get_ui()));
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string ident(const std::string& expected) {
    skip();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail(expected);
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  mpz_class integer() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("integer");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void keyword(const std::string& word) {
    skip();
    std::size_t line = line_, column = column_;
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("'" + word + "'");
    std::string got = ident("'" + word + "'");
    if (got != word) throw SyntaxError(line, column, "'" + word + "'", "'" + got + "'");
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& expected) {
    if (!accept(c)) fail(expected);
  }

  [[noreturn]] void fail(const std::string& expected) {
    std::string found = "end of input";
    if (pos_ < text_.size()) {
      if (ident_char(text_[pos_])) {
        std::size_t end = pos_;
        while (end < text_.size() && ident_char(text_[end])) ++end;
        found = "'" + std::string(text_.substr(pos_, end - pos_)) + "'";
      } else {
        found = "'" + std::string(1, text_[pos_]) + "'";
      }
    }
    throw SyntaxError(line_, column_, expected, found);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

/// num/den rescaled by one common factor so that both have coprime integer
/// coefficients and den has a positive leading coefficient.
std::pair<Polynomial, Polynomial> integral_fraction(Polynomial num, Polynomial den) {
  if (!num.ring()->field().is_rational()) return {num, den};
  mpz_class l = lcm(denominator_lcm(num), denominator_lcm(den));
  mpz_class g = 0;
  for (const auto* p : {&num, &den}) {
    for (const auto& t : p->terms()) g = gcd(g, mpz_class(t.coeff.rational() * l));
  }
  mpq_class scale(l, g == 0 ? mpz_class(1) : g);
  if (den.leading_coeff().is_negative()) scale = -scale;
  FieldElement s(scale);
  return {num.scaled(s), den.scaled(s)};
}

}  // namespace

InputDocument parse_input(std::string_view text, const MonomialOrder& order) {
  return Parser(text).document(order);
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Parser parser(text);
  Polynomial p = parser.poly(ring);
  parser.end();
  return p;
}

std::string print_input(const InputDocument& doc) {
  std::ostringstream os;
  os << "ring " << doc.ring->field().to_string() << '[';
  const auto& vars = doc.ring->variables();
  for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << vars[i];
  os << "];\nideal (";
  for (std::size_t i = 0; i < doc.generators.size(); ++i) {
    os << (i ? ", " : "") << doc.generators[i].to_string();
  }
  os << ");\n";
  return os.str();
}

std::string relation_text(const Polynomial& p) { return primitive_part(p).to_string(); }

std::string emit_json(const NormalizationResult& result, const RingPtr& input_ring, const RunOptions& options) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = "closure-kit/1";
  ordered_json components = ordered_json::array();
  for (const auto& c : result.components) {
    const AffinePresentation& R = c.presentation;
    ordered_json comp;
    comp["variables"] = R.ring()->variables();
    ordered_json relations = ordered_json::array();
    for (const auto& g : R.defining().basis()) relations.push_back(relation_text(g));
    comp["relations"] = relations;
    ordered_json adjoined = ordered_json::array();
    for (const auto& a : R.adjoined) {
      auto [num, den] = integral_fraction(a.numerator, a.denominator);
      ordered_json entry;
      entry["name"] = a.name;
      entry["level"] = a.level;
      entry["numerator"] = num.to_string();
      entry["denominator"] = den.to_string();
      adjoined.push_back(entry);
    }
    comp["adjoined"] = adjoined;
    comp["iterations"] = c.iterations;
    components.push_back(comp);
  }
  doc["components"] = components;
  ordered_json trace = ordered_json::array();
  if (options.trace) {
    for (const auto& e : result.trace) trace.push_back(e.to_string());
  }
  doc["trace"] = trace;
  ordered_json echo;
  echo["field"] = input_ring->field().to_string();
  echo["order"] = options.order;
  echo["radical"] = options.radical;
  echo["max_iter"] = options.max_iterations;
  doc["options"] = echo;
  return doc.dump();
}

std::string format_text(const NormalizationResult& result, const RunOptions& options) {
  std::ostringstream os;
  os << result.components.size() << (result.components.size() == 1 ? " component" : " components") << '\n';
  for (const auto& c : result.components) {
    const AffinePresentation& R = c.presentation;
    os << "\ncomponent c" << c.id << " (" << c.iterations << " extensions)\n";
    os << "  ring " << R.ring()->field().to_string() << '[';
    const auto& vars = R.ring()->variables();
    for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << vars[i];
    os << "]\n  relations:\n";
    for (const auto& g : R.defining().basis()) os << "    " << relation_text(g) << '\n';
    if (!R.adjoined.empty()) os << "  adjoined:\n";
    for (const auto& a : R.adjoined) {
      auto [num, den] = integral_fraction(a.numerator, a.denominator);
      os << "    " << a.name << " = (" << num.to_string() << ") / (" << den.to_string() << ")  level "
         << a.level << '\n';
    }
  }
  if (options.trace) {
    os << "\ntrace:\n";
    for (const auto& e : result.trace) os << "  " << e.to_string() << '\n';
  }
  return os.str();
}

}  // namespace closure
