#include "kahler/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>

#include "kahler/errors.hpp"

namespace kahler {

int module_compare(std::size_t pos_a, const MultiIndex& a, std::size_t pos_b, const MultiIndex& b) noexcept {
  if (pos_a != pos_b) return pos_a < pos_b ? 1 : -1;
  return grevlex_compare(a, b);
}

FreeVector::FreeVector(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}

FreeVector FreeVector::from_components(RingPtr ring, const std::vector<Polynomial>& components) {
  FreeVector v(ring, components.size());
  for (std::size_t pos = 0; pos < components.size(); ++pos) {
    require_same_ring(ring, components[pos].ring_ptr());
    // polynomial terms are already grevlex-descending
    for (const auto& t : components[pos].terms()) v.terms_.push_back({pos, t.exponent, t.coeff});
  }
  return v;
}

FreeVector FreeVector::unit(RingPtr ring, std::size_t rank, std::size_t pos, const Polynomial& c) {
  if (pos >= rank) throw Error(ErrorCode::AmbientMismatch, "position out of range");
  std::vector<Polynomial> comps(rank, Polynomial(ring));
  comps[pos] = c;
  return from_components(std::move(ring), comps);
}

FreeVector FreeVector::from_sorted_terms(RingPtr ring, std::size_t rank, std::vector<ModuleTerm> terms) {
  FreeVector v(std::move(ring), rank);
  v.terms_ = std::move(terms);
  return v;
}

ModuleTerm FreeVector::pop_leading() {
  ModuleTerm t = leading();
  terms_.erase(terms_.begin());
  return t;
}

const ModuleTerm& FreeVector::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero vector");
  return terms_.front();
}

int FreeVector::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

Polynomial FreeVector::component(std::size_t pos) const {
  std::vector<Polynomial::Term> picked;
  for (const auto& t : terms_) {
    if (t.pos == pos) picked.push_back({t.mono, t.coeff});
  }
  return Polynomial::from_terms(ring_, std::move(picked));
}

std::vector<Polynomial> FreeVector::components() const {
  std::vector<std::vector<Polynomial::Term>> parts(rank_);
  for (const auto& t : terms_) parts[t.pos].push_back({t.mono, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring_, std::move(p)));
  return out;
}

void FreeVector::require_ambient(const FreeVector& other) const {
  if (rank_ != other.rank_) {
    throw Error(ErrorCode::AmbientMismatch,
                "free module ranks differ: " + std::to_string(rank_) + " vs " + std::to_string(other.rank_));
  }
  require_same_ring(ring_, other.ring_);
}

void FreeVector::add_scaled(const FreeVector& other, const MultiIndex& shift, const FieldElement& c) {
  require_ambient(other);
  if (c.is_zero() || other.is_zero()) return;
  std::vector<ModuleTerm> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      merged.push_back(std::move(*a++));
      continue;
    }
    MultiIndex mono = b->mono + shift;
    const int cmp = a == terms_.end() ? -1 : module_compare(a->pos, a->mono, b->pos, mono);
    if (cmp > 0) {
      merged.push_back(std::move(*a++));
    } else if (cmp < 0) {
      merged.push_back({b->pos, std::move(mono), b->coeff * c});
      ++b;
    } else {
      FieldElement sum = a->coeff + b->coeff * c;
      if (!sum.is_zero()) merged.push_back({a->pos, std::move(a->mono), std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

FreeVector& FreeVector::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

FreeVector& FreeVector::operator+=(const FreeVector& other) {
  add_scaled(other, MultiIndex(ring_->num_vars()), FieldElement::one(ring_->field));
  return *this;
}

FreeVector& FreeVector::operator-=(const FreeVector& other) {
  add_scaled(other, MultiIndex(ring_->num_vars()), -FieldElement::one(ring_->field));
  return *this;
}

FreeVector operator*(const Polynomial& p, const FreeVector& v) {
  require_same_ring(p.ring_ptr(), v.ring_);
  FreeVector out(v.ring_, v.rank_);
  for (const auto& t : p.terms()) out.add_scaled(v, t.exponent, t.coeff);
  return out;
}

bool operator==(const FreeVector& a, const FreeVector& b) {
  if (a.rank_ != b.rank_ || !(*a.ring_ == *b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.pos != y.pos || !(x.mono == y.mono) || !(x.coeff == y.coeff)) return false;
  }
  return true;
}

std::string FreeVector::to_string() const {
  std::string out = "[";
  const auto comps = components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ", ";
    out += comps[i].to_string();
  }
  return out + "]";
}

GroebnerBudget GroebnerBudget::from_env() {
  GroebnerBudget b;
  auto read = [](const char* name, auto& slot) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0) throw Error(ErrorCode::Usage, std::string(name) + " must be a positive integer");
    slot = static_cast<std::remove_reference_t<decltype(slot)>>(v);
  };
  read("KAHLER_DEGREE_BUDGET", b.max_degree);
  read("KAHLER_STEP_BUDGET", b.max_steps);
  return b;
}

namespace {

[[noreturn]] void step_limit(std::uint64_t budget) {
  throw Error(ErrorCode::ResourceLimit, "Groebner step budget of " + std::to_string(budget) + " reductions exhausted");
}

// Divisor search: basis indices grouped by leading position.
class LeadIndex {
 public:
  explicit LeadIndex(std::size_t rank) : by_pos_(rank) {}

  void add(std::size_t idx, std::size_t pos) { by_pos_[pos].push_back(idx); }

  template <class Elements>
  std::optional<std::size_t> find(const Elements& elems, const ModuleTerm& t, std::optional<std::size_t> skip) const {
    for (std::size_t idx : by_pos_[t.pos]) {
      if (skip && *skip == idx) continue;
      if (elems[idx].leading().mono.divides(t.mono)) return idx;
    }
    return std::nullopt;
  }

 private:
  std::vector<std::vector<std::size_t>> by_pos_;
};

// Full reduction. `cofs`, when given, holds cofactor vectors of the basis
// elements and the accumulated quotient is written to `quot`.
FreeVector reduce_full(FreeVector v, const std::vector<FreeVector>& elems, const LeadIndex& index,
                       const std::vector<FreeVector>* cofs, FreeVector* quot, std::optional<std::size_t> skip,
                       std::uint64_t& steps, std::uint64_t budget) {
  std::vector<ModuleTerm> kept;
  while (!v.is_zero()) {
    const ModuleTerm& lt = v.leading();
    const auto k = index.find(elems, lt, skip);
    if (!k) {
      kept.push_back(v.pop_leading());
      continue;
    }
    if (++steps > budget) step_limit(budget);
    const ModuleTerm& lk = elems[*k].leading();
    const FieldElement c = lt.coeff / lk.coeff;
    const MultiIndex shift = lt.mono - lk.mono;
    if (quot) quot->add_scaled((*cofs)[*k], shift, c);
    v.add_scaled(elems[*k], shift, -c);
  }
  return FreeVector::from_sorted_terms(v.ring_ptr(), v.rank(), std::move(kept));
}

struct Pair {
  std::uint32_t degree;
  std::uint64_t seq;
  std::size_t i;
  std::size_t j;
  bool operator>(const Pair& o) const { return std::tie(degree, seq) > std::tie(o.degree, o.seq); }
};

class Engine {
 public:
  Engine(RingPtr ring, std::size_t rank, std::size_t inputs, const BuchbergerOptions& opts)
      : ring_(std::move(ring)), rank_(rank), inputs_(inputs), opts_(opts), index_(rank) {}

  void add_input(const FreeVector& g, std::size_t input_idx) {
    std::optional<FreeVector> cof;
    if (opts_.track_cofactors) {
      cof = FreeVector::unit(ring_, inputs_, input_idx, Polynomial::constant(ring_, 1));
    }
    insert(g, std::move(cof));
  }

  void run() {
    while (!queue_.empty()) {
      const Pair p = queue_.top();
      queue_.pop();
      pending_[p.i][p.j] = false;
      ++stats_.pairs_considered;
      const MultiIndex l = lcm(elems_[p.i].leading().mono, elems_[p.j].leading().mono);
      if (chain_redundant(p.i, p.j, l)) {
        ++stats_.chain_skips;
        continue;
      }
      if (l.degree() > opts_.budget.max_degree) {
        throw Error(ErrorCode::ResourceLimit, "Groebner degree budget of " + std::to_string(opts_.budget.max_degree) +
                                                  " exceeded (S-pair of degree " + std::to_string(l.degree()) + ")");
      }
      stats_.max_degree_seen = std::max(stats_.max_degree_seen, l.degree());
      ++stats_.pairs_reduced;
      const FieldElement one = FieldElement::one(ring_->field);
      const MultiIndex si = l - elems_[p.i].leading().mono;
      const MultiIndex sj = l - elems_[p.j].leading().mono;
      FreeVector s(ring_, rank_);
      s.add_scaled(elems_[p.i], si, one);
      s.add_scaled(elems_[p.j], sj, -one);
      std::optional<FreeVector> cof;
      if (opts_.track_cofactors) {
        cof = FreeVector(ring_, inputs_);
        cof->add_scaled(cofs_[p.i], si, one);
        cof->add_scaled(cofs_[p.j], sj, -one);
      }
      insert(std::move(s), std::move(cof));
    }
  }

  GroebnerBasis finish() {
    const std::size_t total = elems_.size();
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < total; ++k) {
      const ModuleTerm& lk = elems_[k].leading();
      bool redundant = false;
      for (std::size_t j = 0; j < total && !redundant; ++j) {
        if (j == k) continue;
        const ModuleTerm& lj = elems_[j].leading();
        if (lj.pos != lk.pos || !lj.mono.divides(lk.mono)) continue;
        redundant = !(lj.mono == lk.mono) || j < k;
      }
      if (!redundant) keep.push_back(k);
    }
    std::vector<FreeVector> elems;
    std::vector<FreeVector> cofs;
    LeadIndex index(rank_);
    for (std::size_t k : keep) {
      index.add(elems.size(), elems_[k].leading().pos);
      elems.push_back(elems_[k]);
      if (opts_.track_cofactors) cofs.push_back(cofs_[k]);
    }
    for (std::size_t k = 0; k < elems.size(); ++k) {
      FreeVector quot(ring_, inputs_);
      FreeVector reduced = reduce_full(elems[k], elems, index, opts_.track_cofactors ? &cofs : nullptr,
                                       opts_.track_cofactors ? &quot : nullptr, k, stats_.steps, opts_.budget.max_steps);
      elems[k] = std::move(reduced);
      if (opts_.track_cofactors) cofs[k] -= quot;
    }
    std::vector<std::size_t> order(elems.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& la = elems[a].leading();
      const auto& lb = elems[b].leading();
      return module_compare(la.pos, la.mono, lb.pos, lb.mono) > 0;
    });
    GroebnerBasis gb;
    gb.ring = ring_;
    gb.rank = rank_;
    gb.input_count = inputs_;
    gb.reduced = true;
    gb.stats = stats_;
    std::vector<FreeVector> sorted_cofs;
    for (std::size_t k : order) {
      gb.elements.push_back(std::move(elems[k]));
      if (opts_.track_cofactors) sorted_cofs.push_back(std::move(cofs[k]));
    }
    if (opts_.track_cofactors) gb.cofactors = std::move(sorted_cofs);
    return gb;
  }

 private:
  void insert(FreeVector g, std::optional<FreeVector> cof) {
    FreeVector quot(ring_, inputs_);
    const bool track = opts_.track_cofactors;
    g = reduce_full(std::move(g), elems_, index_, track ? &cofs_ : nullptr, track ? &quot : nullptr, std::nullopt,
                    stats_.steps, opts_.budget.max_steps);
    if (g.is_zero()) return;
    const FieldElement inv = g.leading().coeff.inverse();
    g *= inv;
    if (track) {
      *cof -= quot;
      *cof *= inv;
    }
    const std::size_t idx = elems_.size();
    const ModuleTerm lead = g.leading();
    elems_.push_back(std::move(g));
    if (track) cofs_.push_back(std::move(*cof));
    index_.add(idx, lead.pos);
    for (auto& row : pending_) row.push_back(false);
    pending_.emplace_back(idx + 1, false);
    for (std::size_t i = 0; i < idx; ++i) {
      const ModuleTerm& li = elems_[i].leading();
      if (li.pos != lead.pos) continue;
      if (rank_ == 1 && coprime(li.mono, lead.mono)) continue;
      pending_[i][idx] = true;
      queue_.push({lcm(li.mono, lead.mono).degree(), seq_++, i, idx});
    }
  }

  bool is_pending(std::size_t a, std::size_t b) const { return a < b ? pending_[a][b] : pending_[b][a]; }

  bool chain_redundant(std::size_t i, std::size_t j, const MultiIndex& l) const {
    const std::size_t pos = elems_[i].leading().pos;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      if (k == i || k == j) continue;
      const ModuleTerm& lk = elems_[k].leading();
      if (lk.pos != pos || !lk.mono.divides(l)) continue;
      if (!is_pending(i, k) && !is_pending(j, k)) return true;
    }
    return false;
  }

  RingPtr ring_;
  std::size_t rank_;
  std::size_t inputs_;
  BuchbergerOptions opts_;
  std::vector<FreeVector> elems_;
  std::vector<FreeVector> cofs_;
  LeadIndex index_;
  std::vector<std::vector<bool>> pending_;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> queue_;
  std::uint64_t seq_ = 0;
  GroebnerStats stats_;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<FreeVector>& gens, const BuchbergerOptions& options) {
  if (gens.empty()) throw Error(ErrorCode::EmptyIdeal, "no generators");
  const RingPtr ring = gens.front().ring_ptr();
  const std::size_t rank = gens.front().rank();
  for (const auto& g : gens) {
    if (g.rank() != rank) throw Error(ErrorCode::AmbientMismatch, "generators live in free modules of different rank");
    require_same_ring(ring, g.ring_ptr());
  }
  Engine engine(ring, rank, gens.size(), options);
  for (std::size_t i = 0; i < gens.size(); ++i) engine.add_input(gens[i], i);
  engine.run();
  return engine.finish();
}

NormalFormResult normal_form(const FreeVector& v, const GroebnerBasis& gb, std::uint64_t step_budget) {
  if (v.rank() != gb.rank) {
    throw Error(ErrorCode::AmbientMismatch,
                "vector of rank " + std::to_string(v.rank()) + " against a basis of rank " + std::to_string(gb.rank));
  }
  require_same_ring(v.ring_ptr(), gb.ring);
  LeadIndex index(gb.rank);
  for (std::size_t k = 0; k < gb.elements.size(); ++k) index.add(k, gb.elements[k].leading().pos);
  NormalFormResult out{FreeVector(gb.ring, gb.rank), std::nullopt, 0};
  if (gb.cofactors) {
    FreeVector quot(gb.ring, gb.input_count);
    out.remainder = reduce_full(v, gb.elements, index, &*gb.cofactors, &quot, std::nullopt, out.steps, step_budget);
    out.quotient_in_inputs = std::move(quot);
  } else {
    out.remainder = reduce_full(v, gb.elements, index, nullptr, nullptr, std::nullopt, out.steps, step_budget);
  }
  return out;
}

FreeVector combine(const FreeVector& coeffs, const std::vector<FreeVector>& gens) {
  if (coeffs.rank() != gens.size()) throw Error(ErrorCode::AmbientMismatch, "cofactor count differs from generators");
  if (gens.empty()) throw Error(ErrorCode::EmptyIdeal, "no generators");
  FreeVector sum(gens.front().ring_ptr(), gens.front().rank());
  const auto comps = coeffs.components();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& t : comps[i].terms()) sum.add_scaled(gens[i], t.exponent, t.coeff);
  }
  return sum;
}

MembershipResult module_membership(const FreeVector& v, const std::vector<FreeVector>& gens, bool want_certificate,
                                   const GroebnerBudget& budget) {
  const GroebnerBasis gb = buchberger(gens, {budget, want_certificate});
  NormalFormResult nf = normal_form(v, gb, budget.max_steps);
  MembershipResult out;
  out.member = nf.remainder.is_zero();
  out.stats = gb.stats;
  out.basis_size = gb.elements.size();
  if (out.member && want_certificate) {
    out.certificate_verified = combine(*nf.quotient_in_inputs, gens) == v;
    out.cofactors = std::move(nf.quotient_in_inputs);
  }
  return out;
}

GroebnerBasis ideal_groebner(const std::vector<Polynomial>& gens, const GroebnerBudget& budget) {
  if (gens.empty()) throw Error(ErrorCode::EmptyIdeal, "no generators");
  std::vector<FreeVector> vs;
  for (const auto& g : gens) vs.push_back(FreeVector::from_components(gens.front().ring_ptr(), {g}));
  return buchberger(vs, {budget, false});
}

std::vector<Polynomial> basis_polynomials(const GroebnerBasis& gb) {
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements) out.push_back(e.component(0));
  return out;
}

bool ideal_membership(const Polynomial& h, const std::vector<Polynomial>& gens, const GroebnerBudget& budget) {
  const GroebnerBasis gb = ideal_groebner(gens, budget);
  return normal_form(FreeVector::from_components(h.ring_ptr(), {h}), gb, budget.max_steps).remainder.is_zero();
}

}  // namespace kahler
