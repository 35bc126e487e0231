#include "closure/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "closure/error.hpp"

namespace closure {

// ---------------------------------------------------------------- Monomial

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= divisor.exps_[i];
  return q;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a);
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a);
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
  return m;
}

// ----------------------------------------------------------- MonomialOrder

namespace {

std::strong_ordering compare_lex(const Monomial& a, const Monomial& b,
                                 std::span<const std::size_t> vars) {
  for (std::size_t v : vars)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

std::strong_ordering compare_degrevlex(const Monomial& a, const Monomial& b,
                                       std::span<const std::size_t> vars) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t v : vars) {
    da += a[v];
    db += b[v];
  }
  if (da != db) return da <=> db;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  return std::strong_ordering::equal;
}

std::vector<std::size_t> iota_vars(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> v(end - begin);
  std::iota(v.begin(), v.end(), begin);
  return v;
}

const char* kind_name(MonomialOrder::Kind k) {
  switch (k) {
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::DegRevLex: return "degrevlex";
    case MonomialOrder::Kind::Block: return "block";
  }
  return "?";
}

}  // namespace

MonomialOrder MonomialOrder::block(std::vector<Block> blocks) {
  for (const Block& b : blocks)
    if (b.kind == Kind::Block) throw InvalidOrder("nested block orders are not supported");
  return MonomialOrder(Kind::Block, std::move(blocks));
}

void MonomialOrder::validate(std::size_t nvars) const {
  if (kind_ != Kind::Block) return;
  std::vector<int> seen(nvars, 0);
  for (const Block& b : blocks_)
    for (std::size_t v : b.variables) {
      if (v >= nvars) throw InvalidOrder("block references variable index " + std::to_string(v));
      if (seen[v]++) throw InvalidOrder("variable index " + std::to_string(v) + " in two blocks");
    }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw InvalidOrder("blocks do not cover every variable");
}

std::vector<MonomialOrder::Block> MonomialOrder::as_blocks(std::size_t nvars) const {
  if (kind_ == Kind::Block) return blocks_;
  return {Block{iota_vars(0, nvars), kind_}};
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size())
    throw LengthMismatch("monomials of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::DegRevLex: {
      if (auto c = a.degree() <=> b.degree(); c != 0) return c;
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    case Kind::Block:
      for (const Block& blk : blocks_) {
        auto c = blk.kind == Kind::Lex ? compare_lex(a, b, blk.variables)
                                       : compare_degrevlex(a, b, blk.variables);
        if (c != 0) return c;
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  if (kind_ != Kind::Block) return kind_name(kind_);
  std::ostringstream out;
  out << "block(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out << ", ";
    out << kind_name(blocks_[i].kind) << "{";
    for (std::size_t j = 0; j < blocks_[i].variables.size(); ++j)
      out << (j ? "," : "") << blocks_[i].variables[j];
    out << "}";
  }
  out << ")";
  return out.str();
}

Comparison compare_monomials(const MonomialOrder& order, const Monomial& m1, const Monomial& m2) {
  auto c = order.compare(m1, m2);
  if (c < 0) return Comparison::LT;
  if (c > 0) return Comparison::GT;
  return Comparison::EQ;
}

// ---------------------------------------------------------------- PolyRing

PolyRing::PolyRing(Field field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), variables_(std::move(variables)), order_(std::move(order)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].empty()) throw UnknownVariable("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (variables_[i] == variables_[j])
        throw UnknownVariable("duplicate variable " + variables_[i]);
  }
  order_.validate(variables_.size());
}

RingPtr PolyRing::make(Field field, std::vector<std::string> variables, MonomialOrder order) {
  return std::make_shared<const PolyRing>(field, std::move(variables), std::move(order));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

std::size_t PolyRing::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw UnknownVariable(std::string(name));
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return make(field_, variables_, std::move(order)); }

RingPtr PolyRing::with_variables_appended(const std::vector<std::string>& names) const {
  std::vector<std::string> vars = variables_;
  vars.insert(vars.end(), names.begin(), names.end());
  if (order_.kind() != MonomialOrder::Kind::Block) return make(field_, std::move(vars), order_);
  auto blocks = order_.blocks();
  blocks.push_back({iota_vars(nvars(), vars.size()), MonomialOrder::Kind::DegRevLex});
  return make(field_, std::move(vars), MonomialOrder::block(std::move(blocks)));
}

RingPtr PolyRing::with_variables_prepended(const std::vector<std::string>& names,
                                           MonomialOrder::Kind kind) const {
  const std::size_t k = names.size();
  std::vector<std::string> vars = names;
  vars.insert(vars.end(), variables_.begin(), variables_.end());
  std::vector<MonomialOrder::Block> blocks{{iota_vars(0, k), kind}};
  for (auto b : order_.as_blocks(nvars())) {
    for (auto& v : b.variables) v += k;
    blocks.push_back(std::move(b));
  }
  return make(field_, std::move(vars), MonomialOrder::block(std::move(blocks)));
}

std::string PolyRing::fresh_name(const std::string& stem) const {
  std::string name = stem;
  while (index_of(name)) name += "_";
  return name;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch("operands live in different polynomial rings");
}

// -------------------------------------------------------------- Polynomial

namespace {

// Merge of two descending term lists: a + sign*b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                              const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
    } else {
      FieldElement s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
  return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  Monomial one(ring->nvars());
  return term(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  FieldElement value = ring->field().from_integer(c);
  return constant(std::move(ring), value);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->nvars());
  m[index] = 1;
  FieldElement one = ring->field().one();
  return term(std::move(ring), std::move(m), std::move(one));
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  const std::size_t i = ring->require_index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, FieldElement c) {
  if (m.size() != ring->nvars()) throw LengthMismatch("monomial length does not match ring");
  std::vector<Term> terms;
  if (!c.is_zero()) terms.push_back({std::move(m), std::move(c)});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& order = ring->order();
  for (const Term& t : terms)
    if (t.monomial.size() != ring->nvars()) throw LengthMismatch("monomial length does not match ring");
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (Term& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
  return Polynomial(std::move(ring), std::move(merged));
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff.is_one();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const { return degree_in(var) > 0; }

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scaled(field_inv(leading_coeff()));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff *= c;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldElement& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back({t.monomial * m, t.coeff * c});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Polynomial Polynomial::minus_scaled(const FieldElement& c, const Monomial& m, const Polynomial& g) const {
  const MonomialOrder& order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const std::size_t n = g.terms_.size();
  Monomial gm;
  auto next_g = [&] { gm = g.terms_[j].monomial * m; };
  if (j < n) next_g();
  while (i < terms_.size() && j < n) {
    auto cmp = order.compare(terms_[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -(g.terms_[j].coeff * c)});
      if (++j < n) next_g();
    } else {
      FieldElement s = terms_[i].coeff - g.terms_[j].coeff * c;
      if (!s.is_zero()) out.push_back({gm, std::move(s)});
      ++i;
      if (++j < n) next_g();
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  while (j < n) {
    out.push_back({gm, -(g.terms_[j].coeff * c)});
    if (++j < n) next_g();
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) return Polynomial(target, terms_);
  if (!(ring_->field() == target->field()))
    throw RingMismatch("cannot move polynomial between fields " + ring_->field().to_string() + " and " +
                       target->field().to_string());
  const std::size_t n = ring_->nvars();
  std::vector<std::optional<std::size_t>> map(n);
  for (std::size_t v = 0; v < n; ++v) map[v] = target->index_of(ring_->variables()[v]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t v = 0; v < n; ++v) {
      if (t.monomial[v] == 0) continue;
      if (!map[v]) throw UnknownVariable(ring_->variables()[v]);
      m[*map[v]] = t.monomial[v];
    }
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  const auto& names = ring_->variables();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    const bool negative = t.coeff.is_negative();
    if (k == 0)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    const FieldElement mag = negative ? -t.coeff : t.coeff;
    const bool unit_monomial = t.monomial.is_one();
    bool need_star = false;
    if (unit_monomial || !mag.is_one()) {
      out << mag.to_string();
      need_star = true;
    }
    for (std::size_t v = 0; v < t.monomial.size(); ++v) {
      if (t.monomial[v] == 0) continue;
      if (need_star) out << "*";
      out << names[v];
      if (t.monomial[v] > 1) out << "^" << t.monomial[v];
      need_star = true;
    }
  }
  return out.str();
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = -t.coeff;
  return Polynomial(ring_, std::move(out));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_);
  return Polynomial(p.ring_, merge_terms(p.terms_, q.terms_, false, p.ring_->order()));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_);
  return Polynomial(p.ring_, merge_terms(p.terms_, q.terms_, true, p.ring_->order()));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_);
  const Polynomial& small = p.size() <= q.size() ? p : q;
  const Polynomial& large = p.size() <= q.size() ? q : p;
  Polynomial acc(p.ring_);
  for (const Term& t : small.terms_) acc = acc.minus_scaled(-t.coeff, t.monomial, large);
  return acc;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  return same_ring(p.ring_, q.ring_) && p.terms_ == q.terms_;
}

Polynomial poly_op(PolyOpKind kind, const Polynomial& p, const Polynomial& q) {
  switch (kind) {
    case PolyOpKind::Add: return p + q;
    case PolyOpKind::Sub: return p - q;
    case PolyOpKind::Mul: return p * q;
  }
  return p;
}

// ---------------------------------------------------------------- division

DivisionResult divide_with_remainder(const Polynomial& p, std::span<const Polynomial> divisors) {
  for (const Polynomial& d : divisors) {
    require_same_ring(p.ring(), d.ring());
    if (d.is_zero()) throw ZeroDivisorPolynomial("division by the zero polynomial");
  }
  const RingPtr& ring = p.ring();
  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<Term> remainder;
  Polynomial work = p;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial& d = divisors[i];
      if (!d.leading_monomial().divides(lt.monomial)) continue;
      FieldElement c = lt.coeff / d.leading_coeff();
      Monomial m = lt.monomial.quotient(d.leading_monomial());
      quotient_terms[i].push_back({m, c});
      work = work.minus_scaled(c, m, d);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      work = work.tail();
    }
  }
  DivisionResult result{{}, Polynomial::from_terms(ring, std::move(remainder))};
  for (auto& terms : quotient_terms) result.quotients.push_back(Polynomial::from_terms(ring, std::move(terms)));
  return result;
}

DivisionResult divide_with_remainder(const Polynomial& p, std::span<const Polynomial> divisors,
                                     const MonomialOrder& order) {
  if (order == p.ring()->order()) return divide_with_remainder(p, divisors);
  RingPtr ordered = p.ring()->with_order(order);
  std::vector<Polynomial> moved;
  for (const Polynomial& d : divisors) {
    require_same_ring(p.ring(), d.ring());
    moved.push_back(d.in_ring(ordered));
  }
  DivisionResult r = divide_with_remainder(p.in_ring(ordered), moved);
  for (auto& q : r.quotients) q = q.in_ring(p.ring());
  r.remainder = r.remainder.in_ring(p.ring());
  return r;
}

Polynomial exact_quotient(const Polynomial& p, const Polynomial& d) {
  const Polynomial divisors[] = {d};
  DivisionResult r = divide_with_remainder(p, divisors);
  if (!r.remainder.is_zero()) throw NotAMember(d.to_string() + " does not divide " + p.to_string());
  return r.quotients.front();
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.ring()->nvars()) throw UnknownVariable("index " + std::to_string(var));
  std::vector<Term> out;
  const Field& field = p.ring()->field();
  for (const Term& t : p.terms()) {
    if (t.monomial[var] == 0) continue;
    Monomial m = t.monomial;
    FieldElement c = t.coeff * field.from_integer(static_cast<long>(m[var]));
    --m[var];
    out.push_back({std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

mpz_class denominator_lcm(const Polynomial& p) {
  mpz_class l = 1;
  for (const Term& t : p.terms())
    if (t.coeff.is_rational()) l = lcm(l, t.coeff.rational().get_den());
  return l;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  if (!p.ring()->field().is_rational()) return p.monic();
  const mpz_class scale = denominator_lcm(p);
  mpz_class content = 0;
  for (const Term& t : p.terms()) {
    mpq_class c = t.coeff.rational() * scale;
    content = gcd(content, c.get_num());
  }
  mpq_class factor(scale, content);
  if (p.leading_coeff().is_negative()) factor = -factor;
  return p.scaled(FieldElement(factor));
}

}  // namespace closure
