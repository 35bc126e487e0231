#include "closure/groebner.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "closure/error.hpp"

namespace closure {

// ------------------------------------------------------------------ Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), memo_(std::make_shared<Memo>()) {
  for (Polynomial& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

const std::vector<Polynomial>& Ideal::basis() const {
  std::lock_guard lock(memo_->mutex);
  const std::string key = ring_->order().to_string();
  auto it = memo_->bases.find(key);
  if (it == memo_->bases.end()) it = memo_->bases.emplace(key, detail::groebner_basis(generators_)).first;
  return it->second;
}

std::vector<Polynomial> Ideal::basis(const MonomialOrder& order) const {
  if (order == ring_->order()) return basis();
  std::lock_guard lock(memo_->mutex);
  const std::string key = order.to_string();
  auto it = memo_->bases.find(key);
  if (it == memo_->bases.end()) {
    RingPtr ordered = ring_->with_order(order);
    std::vector<Polynomial> moved;
    for (const Polynomial& g : generators_) moved.push_back(g.in_ring(ordered));
    it = memo_->bases.emplace(key, detail::groebner_basis(std::move(moved))).first;
  }
  return it->second;
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().is_constant();
}

bool Ideal::contains(const Polynomial& p) const { return ideal_member(p, *this); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Polynomial& g) { return contains(g.in_ring(ring_)); });
}

bool Ideal::equals(const Ideal& other) const { return contains(other) && other.contains(*this); }

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<Polynomial> moved;
  for (const Polynomial& g : generators_) moved.push_back(g.in_ring(target));
  return Ideal(target, std::move(moved));
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_, b.ring_);
  std::vector<Polynomial> gens = a.generators_;
  gens.insert(gens.end(), b.generators_.begin(), b.generators_.end());
  return Ideal(a.ring_, std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_, b.ring_);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators_)
    for (const Polynomial& g : b.generators_) gens.push_back(f * g);
  return Ideal(a.ring_, std::move(gens));
}

std::string Ideal::to_string() const {
  std::ostringstream out;
  out << "(";
  if (generators_.empty()) out << "0";
  for (std::size_t i = 0; i < generators_.size(); ++i) out << (i ? ", " : "") << generators_[i].to_string();
  out << ")";
  return out.str();
}

// ------------------------------------------------------------- Buchberger

namespace detail {

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis) {
  std::vector<Term> remainder;
  Polynomial work = p;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    const Polynomial* divisor = nullptr;
    for (const Polynomial& g : basis)
      if (g.leading_monomial().divides(lt.monomial)) {
        divisor = &g;
        break;
      }
    if (divisor) {
      work = work.minus_scaled(lt.coeff / divisor->leading_coeff(),
                               lt.monomial.quotient(divisor->leading_monomial()), *divisor);
    } else {
      remainder.push_back(lt);
      work = work.tail();
    }
  }
  return Polynomial::from_terms(p.ring(), std::move(remainder));
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class BuchbergerState {
 public:
  BuchbergerState(RingPtr ring, const PairFilter& filter) : ring_(std::move(ring)), filter_(filter) {}

  void add(Polynomial h) {
    h = reduce_active(h);
    if (h.is_zero()) return;
    insert(h.monic());
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      const auto& order = ring_->order();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (order.compare(pairs_[k].lcm, pairs_[best].lcm) < 0) best = k;
      Pair pair = std::move(pairs_[best]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Polynomial s = s_polynomial(pair);
      Polynomial h = reduce_active(s);
      if (!h.is_zero()) insert(h.monic());
    }
  }

  std::vector<Polynomial> reduced_basis() const {
    if (unit_) return {Polynomial::constant(ring_, 1)};
    std::vector<Polynomial> minimal;
    for (std::size_t idx : active_) minimal.push_back(polys_[idx]);
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t m = 0; m < minimal.size(); ++m)
        if (m != k) others.push_back(minimal[m]);
      const Polynomial& g = minimal[k];
      Polynomial lead = Polynomial::term(ring_, g.leading_monomial(), g.leading_coeff());
      out.push_back((lead + reduce(g.tail(), others)).monic());
    }
    const auto& order = ring_->order();
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return out;
  }

 private:
  bool allowed(const Monomial& a, const Monomial& b) const { return !filter_ || filter_(a, b); }

  Polynomial reduce_active(const Polynomial& p) const {
    std::vector<Term> remainder;
    Polynomial work = p;
    while (!work.is_zero()) {
      const Term& lt = work.leading_term();
      const Polynomial* divisor = nullptr;
      for (std::size_t idx : active_)
        if (polys_[idx].leading_monomial().divides(lt.monomial)) {
          divisor = &polys_[idx];
          break;
        }
      if (divisor) {
        work = work.minus_scaled(lt.coeff / divisor->leading_coeff(),
                                 lt.monomial.quotient(divisor->leading_monomial()), *divisor);
      } else {
        remainder.push_back(lt);
        work = work.tail();
      }
    }
    return Polynomial::from_terms(p.ring(), std::move(remainder));
  }

  Polynomial s_polynomial(const Pair& pair) const {
    const Polynomial& f = polys_[pair.i];
    const Polynomial& g = polys_[pair.j];
    Polynomial a = f.times_term(pair.lcm.quotient(f.leading_monomial()), field_inv(f.leading_coeff()));
    return a.minus_scaled(field_inv(g.leading_coeff()), pair.lcm.quotient(g.leading_monomial()), g);
  }

  // Gebauer-Möller update with the new element h.
  void insert(Polynomial h) {
    if (h.is_constant()) {
      unit_ = true;
      return;
    }
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].leading_monomial();

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      enum { Pending, Kept, Dropped } state = Pending;
    };
    std::vector<Candidate> cands;
    for (std::size_t g : active_) {
      const Monomial& lg = polys_[g].leading_monomial();
      if (!allowed(lh, lg)) continue;
      cands.push_back({g, Monomial::lcm(lh, lg), lh.coprime(lg)});
    }
    for (auto& c : cands) {
      bool keep = c.coprime;
      if (!keep) {
        keep = true;
        for (const auto& other : cands)
          if (&other != &c && other.state != Candidate::Dropped && other.lcm.divides(c.lcm)) {
            keep = false;
            break;
          }
      }
      c.state = keep ? Candidate::Kept : Candidate::Dropped;
    }

    std::vector<Pair> kept;
    for (Pair& p : pairs_) {
      const bool drop = lh.divides(p.lcm) &&
                        Monomial::lcm(polys_[p.i].leading_monomial(), lh) != p.lcm &&
                        Monomial::lcm(lh, polys_[p.j].leading_monomial()) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& c : cands)
      if (c.state == Candidate::Kept && !c.coprime) kept.push_back({c.g, hi, std::move(c.lcm)});
    pairs_ = std::move(kept);

    std::vector<std::size_t> still_active;
    for (std::size_t g : active_)
      if (!lh.divides(polys_[g].leading_monomial())) still_active.push_back(g);
    still_active.push_back(hi);
    active_ = std::move(still_active);
  }

  RingPtr ring_;
  const PairFilter& filter_;
  std::vector<Polynomial> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const PairFilter& filter) {
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  if (gens.empty()) return {};
  const RingPtr ring = gens.front().ring();
  for (const Polynomial& g : gens) require_same_ring(ring, g.ring());
  // Smaller generators first keeps early reductions cheap.
  const auto& order = ring->order();
  std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  BuchbergerState state(ring, filter);
  for (Polynomial& g : gens) state.add(std::move(g));
  state.run();
  return state.reduced_basis();
}

}  // namespace detail

Ideal buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw EmptyIdeal("buchberger needs at least one polynomial to fix the ring");
  RingPtr ring = gens.front().ring()->with_order(order);
  std::vector<Polynomial> moved;
  for (const Polynomial& g : gens) {
    require_same_ring(gens.front().ring(), g.ring());
    moved.push_back(g.in_ring(ring));
  }
  return Ideal(ring, detail::groebner_basis(std::move(moved))).reduced();
}

Polynomial normal_form(const Polynomial& p, const Ideal& ideal) {
  require_same_ring(p.ring(), ideal.ring());
  return detail::reduce(p, ideal.basis());
}

bool ideal_member(const Polynomial& p, const Ideal& ideal) { return normal_form(p, ideal).is_zero(); }

// ------------------------------------------------------- syzygies and lifts

TrackedBasis::TrackedBasis(std::vector<Polynomial> gens, Ideal ambient)
    : base_(ambient.ring()), count_(gens.size()), ambient_(std::move(ambient)) {
  for (const Polynomial& g : gens) require_same_ring(base_, g.ring());
  std::vector<std::string> slots;
  slots.push_back(base_->fresh_name("@value"));
  for (std::size_t j = 0; j < count_; ++j) slots.push_back(base_->fresh_name("@slot" + std::to_string(j)));
  module_ring_ = base_->with_variables_prepended(slots, MonomialOrder::Kind::Lex);

  const Polynomial value = Polynomial::variable(module_ring_, 0);
  std::vector<Polynomial> elements;
  for (std::size_t j = 0; j < count_; ++j)
    elements.push_back(gens[j].in_ring(module_ring_) * value + Polynomial::variable(module_ring_, j + 1));
  for (const Polynomial& d : ambient_.basis()) elements.push_back(d.in_ring(module_ring_) * value);

  const std::size_t nslots = count_ + 1;
  auto same_slot = [nslots](const Monomial& a, const Monomial& b) {
    for (std::size_t s = 0; s < nslots; ++s)
      if (a[s] != 0 || b[s] != 0) return a[s] != 0 && b[s] != 0;
    return true;
  };
  basis_ = detail::groebner_basis(std::move(elements), same_slot);
}

std::optional<std::size_t> TrackedBasis::slot_of(const Monomial& m) const {
  for (std::size_t s = 0; s <= count_; ++s)
    if (m[s] != 0) return s;
  return std::nullopt;
}

namespace {

// Splits a slot-linear module-ring polynomial into its slot components.
std::vector<std::vector<Term>> split_slots(const Polynomial& p, std::size_t nslots, std::size_t nbase) {
  std::vector<std::vector<Term>> parts(nslots);
  for (const Term& t : p.terms()) {
    std::size_t slot = nslots;
    for (std::size_t s = 0; s < nslots; ++s)
      if (t.monomial[s] != 0) slot = s;
    std::vector<std::uint32_t> exps(nbase);
    for (std::size_t v = 0; v < nbase; ++v) exps[v] = t.monomial[nslots + v];
    parts[slot].push_back({Monomial(std::move(exps)), t.coeff});
  }
  return parts;
}

}  // namespace

std::optional<std::vector<Polynomial>> TrackedBasis::try_lift(const Polynomial& p) const {
  require_same_ring(base_, p.ring());
  const Polynomial value = Polynomial::variable(module_ring_, 0);
  Polynomial r = detail::reduce(p.in_ring(module_ring_) * value, basis_);
  auto parts = split_slots(r, count_ + 1, base_->nvars());
  if (!parts[0].empty()) return std::nullopt;
  std::vector<Polynomial> coeffs;
  for (std::size_t j = 0; j < count_; ++j) {
    Polynomial c = -Polynomial::from_terms(base_, std::move(parts[j + 1]));
    coeffs.push_back(normal_form(c, ambient_));
  }
  return coeffs;
}

std::vector<Polynomial> TrackedBasis::lift(const Polynomial& p) const {
  auto c = try_lift(p);
  if (!c) throw NotAMember(p.to_string() + " is not in the ideal of the given generators");
  return *std::move(c);
}

SyzygyModule TrackedBasis::syzygies() const {
  SyzygyModule module{count_, {}};
  for (const Polynomial& element : basis_) {
    auto slot = slot_of(element.leading_monomial());
    if (!slot || *slot == 0) continue;
    auto parts = split_slots(element, count_ + 1, base_->nvars());
    std::vector<Polynomial> vec;
    bool nonzero = false;
    for (std::size_t j = 0; j < count_; ++j) {
      Polynomial entry = normal_form(Polynomial::from_terms(base_, std::move(parts[j + 1])), ambient_);
      nonzero = nonzero || !entry.is_zero();
      vec.push_back(std::move(entry));
    }
    if (nonzero && std::find(module.relations.begin(), module.relations.end(), vec) == module.relations.end())
      module.relations.push_back(std::move(vec));
  }
  return module;
}

SyzygyModule syzygies(const std::vector<Polynomial>& gens, const Ideal& ambient) {
  return TrackedBasis(gens, ambient).syzygies();
}

std::vector<Polynomial> lift(const Polynomial& p, const std::vector<Polynomial>& gens, const Ideal& ambient) {
  return TrackedBasis(gens, ambient).lift(p);
}

// -------------------------------------------------------------- elimination

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop) {
  std::vector<std::size_t> idx;
  for (const std::string& name : drop) idx.push_back(ideal.ring()->require_index(name));
  return eliminate(ideal, idx);
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  std::vector<bool> dropped(n, false);
  for (std::size_t v : drop) {
    if (v >= n) throw UnknownVariable("index " + std::to_string(v));
    dropped[v] = true;
  }
  if (drop.empty()) return ideal;

  std::vector<std::size_t> first, rest;
  for (std::size_t v = 0; v < n; ++v) (dropped[v] ? first : rest).push_back(v);
  const auto rest_kind = ring->order().kind() == MonomialOrder::Kind::Lex ? MonomialOrder::Kind::Lex
                                                                          : MonomialOrder::Kind::DegRevLex;
  std::vector<MonomialOrder::Block> blocks{{first, MonomialOrder::Kind::Lex}};
  if (!rest.empty()) blocks.push_back({rest, rest_kind});
  const auto basis = ideal.basis(MonomialOrder::block(std::move(blocks)));

  std::vector<Polynomial> kept;
  for (const Polynomial& g : basis) {
    const bool uses_dropped = std::any_of(first.begin(), first.end(), [&](std::size_t v) { return g.involves(v); });
    if (!uses_dropped) kept.push_back(g.in_ring(ring));
  }
  return Ideal(ring, std::move(kept));
}

// ---------------------------------------------------------------- dimension

std::vector<std::size_t> max_independent_set(const Ideal& ideal) {
  const auto& basis = ideal.basis();
  const std::size_t n = ideal.ring()->nvars();
  if (n >= 31) throw InvalidOrder("dimension supports at most 30 variables");
  if (ideal.is_unit()) return {};
  std::vector<std::uint32_t> supports;
  for (const Polynomial& g : basis) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (g.leading_monomial()[v] != 0) s |= 1u << v;
    supports.push_back(s);
  }
  std::uint32_t best = 0;
  int best_size = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best_size) continue;
    const bool independent =
        std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~mask) == 0; });
    if (independent) {
      best = mask;
      best_size = size;
    }
  }
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < n; ++v)
    if (best & (1u << v)) vars.push_back(v);
  return vars;
}

int dimension(const Ideal& ideal) {
  if (ideal.is_unit()) return -1;
  return static_cast<int>(max_independent_set(ideal).size());
}

}  // namespace closure
