#include "algstat/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "algstat/error.hpp"

namespace algstat {

namespace {

std::uint64_t divmask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  return mask;
}

// Polynomial with terms sorted descending under the active order, monic
// unless zero.
struct GPoly {
  std::vector<Term> terms;
  std::uint64_t sugar = 0;
  std::uint64_t mask = 0;

  const Monomial& lm() const { return terms.front().monomial; }
};

class Engine {
 public:
  Engine(const MonomialOrder& order, GroebnerOptions options) : order_(order), options_(options) {}

  bool greater(const Monomial& a, const Monomial& b) const { return order_.greater(a, b); }

  GPoly from_poly(const MultiPoly& f, bool normalize = true) const {
    GPoly g;
    g.terms = f.terms();
    std::sort(g.terms.begin(), g.terms.end(),
              [this](const Term& a, const Term& b) { return greater(a.monomial, b.monomial); });
    g.sugar = f.total_degree();
    if (normalize) finish(g);
    return g;
  }

  void finish(GPoly& g) const {
    if (g.terms.empty()) return;
    if (g.terms.front().coeff != 1) {
      BigRat inv = 1 / g.terms.front().coeff;
      for (auto& t : g.terms) t.coeff *= inv;
    }
    g.mask = divmask(g.lm());
  }

  // a[ia..] - c * q * b[ib..]; both inputs sorted descending.
  std::vector<Term> sub_multiple(const std::vector<Term>& a, std::size_t ia, const std::vector<Term>& b,
                                 std::size_t ib, const Monomial& q, const BigRat& c) const {
    std::vector<Term> out;
    out.reserve(a.size() - ia + b.size() - ib);
    Monomial shifted;
    bool have = false;
    while (ia < a.size() || ib < b.size()) {
      if (ib < b.size() && !have) {
        shifted = b[ib].monomial * q;
        have = true;
      }
      if (!have) {
        out.push_back(a[ia++]);
        continue;
      }
      if (ia == a.size()) {
        out.push_back({std::move(shifted), -(c * b[ib].coeff)});
        ++ib;
        have = false;
        continue;
      }
      auto cmp = order_.compare(a[ia].monomial, shifted);
      if (cmp == std::strong_ordering::greater) {
        out.push_back(a[ia++]);
      } else if (cmp == std::strong_ordering::less) {
        out.push_back({std::move(shifted), -(c * b[ib].coeff)});
        ++ib;
        have = false;
      } else {
        BigRat v = a[ia].coeff - c * b[ib].coeff;
        if (v != 0) out.push_back({std::move(shifted), std::move(v)});
        ++ia;
        ++ib;
        have = false;
      }
    }
    return out;
  }

  const GPoly* find_divisor(const Monomial& m, std::uint64_t mask, std::span<const GPoly* const> basis) const {
    const GPoly* best = nullptr;
    for (const GPoly* g : basis) {
      if ((g->mask & ~mask) != 0) continue;
      if (!g->lm().divides(m)) continue;
      if (!best || g->terms.size() < best->terms.size()) best = g;
    }
    return best;
  }

  // Full reduction of h by `basis`, keeping the coefficient scale.
  GPoly reduce_raw(GPoly h, std::span<const GPoly* const> basis) const {
    std::vector<Term> result;
    std::vector<Term> cur = std::move(h.terms);
    std::size_t pos = 0;
    while (pos < cur.size()) {
      const Term& lt = cur[pos];
      const GPoly* g = find_divisor(lt.monomial, divmask(lt.monomial), basis);
      if (!g) {
        result.push_back(std::move(cur[pos]));
        ++pos;
        continue;
      }
      Monomial q = lt.monomial / g->lm();
      BigRat c = lt.coeff;
      h.sugar = std::max(h.sugar, q.degree() + g->sugar);
      cur = sub_multiple(cur, pos + 1, g->terms, 1, q, c);
      pos = 0;
    }
    h.terms = std::move(result);
    return h;
  }

  GPoly reduce(GPoly h, std::span<const GPoly* const> basis) const {
    GPoly r = reduce_raw(std::move(h), basis);
    finish(r);
    return r;
  }

  GPoly spoly(const GPoly& f, const GPoly& g) const {
    Monomial l = f.lm().lcm(g.lm());
    Monomial qf = l / f.lm();
    Monomial qg = l / g.lm();
    std::vector<Term> shifted_f;
    shifted_f.reserve(f.terms.size());
    for (std::size_t i = 1; i < f.terms.size(); ++i) shifted_f.push_back({f.terms[i].monomial * qf, f.terms[i].coeff});
    GPoly s;
    s.terms = sub_multiple(shifted_f, 0, g.terms, 1, qg, BigRat(1));
    s.sugar = std::max(qf.degree() + f.sugar, qg.degree() + g.sugar);
    return s;
  }

  std::vector<GPoly> run(std::vector<GPoly> inputs);

  const MonomialOrder& order() const { return order_; }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint64_t sugar;
  };

  void update(std::size_t h);
  std::vector<const GPoly*> active_view() const {
    std::vector<const GPoly*> v;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) v.push_back(&polys_[i]);
    return v;
  }

  MonomialOrder order_;
  GroebnerOptions options_;
  std::vector<GPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

void Engine::update(std::size_t h) {
  const Monomial& lmh = polys_[h].lm();
  struct Cand {
    std::size_t g;
    Monomial lcm;
    bool coprime;
    bool keep = true;
  };
  std::vector<Cand> cands;
  for (std::size_t g = 0; g < h; ++g) {
    if (!active_[g]) continue;
    cands.push_back({g, polys_[g].lm().lcm(lmh), polys_[g].lm().coprime(lmh)});
  }
  // Chain criterion among the new pairs: drop (h,g1) if some other new pair's
  // lcm properly divides its lcm (ties keep the first).
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (cands[a].coprime) continue;
    for (std::size_t b = 0; b < cands.size(); ++b) {
      if (a == b || !cands[b].keep) continue;
      if (cands[b].lcm.divides(cands[a].lcm) && (cands[b].lcm != cands[a].lcm || b < a)) {
        cands[a].keep = false;
        break;
      }
    }
  }
  // Old pairs made redundant by h.
  std::vector<Pair> kept;
  kept.reserve(pairs_.size());
  for (auto& p : pairs_) {
    if (lmh.divides(p.lcm)) {
      Monomial li = polys_[p.i].lm().lcm(lmh);
      Monomial lj = polys_[p.j].lm().lcm(lmh);
      if (li != p.lcm && lj != p.lcm) continue;
    }
    kept.push_back(std::move(p));
  }
  pairs_ = std::move(kept);
  // Product criterion: coprime leading monomials need no pair.
  for (auto& c : cands) {
    if (!c.keep || c.coprime) continue;
    const GPoly& g = polys_[c.g];
    std::uint64_t sugar = std::max(c.lcm.degree() - g.lm().degree() + g.sugar,
                                   c.lcm.degree() - lmh.degree() + polys_[h].sugar);
    pairs_.push_back({c.g, h, std::move(c.lcm), sugar});
  }
  for (std::size_t g = 0; g < h; ++g)
    if (active_[g] && lmh.divides(polys_[g].lm())) active_[g] = false;
}

std::vector<GPoly> Engine::run(std::vector<GPoly> inputs) {
  std::sort(inputs.begin(), inputs.end(), [this](const GPoly& a, const GPoly& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    return greater(b.lm(), a.lm());
  });
  for (auto& f : inputs) {
    auto view = active_view();
    GPoly r = reduce(std::move(f), view);
    if (r.terms.empty()) continue;
    polys_.push_back(std::move(r));
    active_.push_back(true);
    update(polys_.size() - 1);
  }
  while (!pairs_.empty()) {
    auto best = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return greater(b.lcm, a.lcm);
    });
    Pair p = std::move(*best);
    *best = std::move(pairs_.back());
    pairs_.pop_back();
    if (options_.degree_cap && p.lcm.degree() > *options_.degree_cap) {
      throw Error(ErrorCode::DegreeBudgetExceeded,
                  "critical pair of degree " + std::to_string(p.lcm.degree()) + " exceeds cap " +
                      std::to_string(*options_.degree_cap));
    }
    GPoly s = spoly(polys_[p.i], polys_[p.j]);
    auto view = active_view();
    GPoly r = reduce(std::move(s), view);
    if (r.terms.empty()) continue;
    if (r.lm().is_one()) {
      GPoly one = std::move(r);
      return {std::move(one)};
    }
    polys_.push_back(std::move(r));
    active_.push_back(true);
    update(polys_.size() - 1);
  }
  // Inter-reduce the (already minimal) active set, smallest leading monomial first.
  std::vector<GPoly> minimal;
  for (std::size_t i = 0; i < polys_.size(); ++i)
    if (active_[i]) minimal.push_back(std::move(polys_[i]));
  std::sort(minimal.begin(), minimal.end(), [this](const GPoly& a, const GPoly& b) { return greater(b.lm(), a.lm()); });
  std::vector<GPoly> reduced;
  for (auto& g : minimal) {
    std::vector<const GPoly*> view;
    for (auto& r : reduced) view.push_back(&r);
    GPoly tail;
    tail.terms.assign(g.terms.begin() + 1, g.terms.end());
    tail.sugar = g.sugar;
    GPoly out = reduce_raw(std::move(tail), view);
    out.terms.insert(out.terms.begin(), std::move(g.terms.front()));
    out.sugar = g.sugar;
    finish(out);
    reduced.push_back(std::move(out));
  }
  std::reverse(reduced.begin(), reduced.end());
  return reduced;
}

MultiPoly to_poly(const Ring& ring, GPoly g) { return MultiPoly::from_terms(ring, std::move(g.terms)); }

Ring require_common_ring(std::span<const MultiPoly> polys, const Ring* hint) {
  Ring ring = hint ? *hint : Ring{};
  for (const auto& p : polys) {
    if (!ring) ring = p.ring();
    else if (!same_ring(*ring, *p.ring())) throw Error(ErrorCode::RingMismatch, "polynomials from different rings");
  }
  return ring;
}

}  // namespace

const Term& leading_term(const MultiPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorCode::IndexOutOfRange, "zero polynomial has no leading term");
  if (order.kind() == MonomialOrder::Kind::DegRevLex) return f.terms().front();
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis, const MonomialOrder& order) {
  Ring ring = f.ring();
  require_common_ring(basis, &ring);
  Engine engine(order, {});
  std::vector<GPoly> gs;
  for (const auto& g : basis)
    if (!g.is_zero()) gs.push_back(engine.from_poly(g));
  std::vector<const GPoly*> view;
  for (auto& g : gs) view.push_back(&g);
  if (f.is_zero()) return f;
  GPoly r = engine.reduce_raw(engine.from_poly(f, false), view);
  return MultiPoly::from_terms(ring, std::move(r.terms));
}

std::vector<MultiPoly> groebner_basis(std::span<const MultiPoly> gens, const MonomialOrder& order,
                                      const GroebnerOptions& options) {
  Ring ring = require_common_ring(gens, nullptr);
  Engine engine(order, options);
  std::vector<GPoly> inputs;
  for (const auto& g : gens)
    if (!g.is_zero()) inputs.push_back(engine.from_poly(g));
  std::vector<MultiPoly> out;
  for (auto& g : engine.run(std::move(inputs))) out.push_back(to_poly(ring, std::move(g)));
  return out;
}

// ---- Ideal ----------------------------------------------------------------

Ideal::Ideal(Ring ring, std::vector<MultiPoly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!same_ring(*g.ring(), *ring_)) throw Error(ErrorCode::RingMismatch, "ideal generator outside ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<MultiPoly>& Ideal::groebner_basis(const MonomialOrder& order, const GroebnerOptions& options) const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->order || !(*cache_->order == order)) {
    cache_->basis = algstat::groebner_basis(gens_, order, options);
    cache_->order = order;
  }
  return cache_->basis;
}

void Ideal::set_groebner_basis(const MonomialOrder& order, std::vector<MultiPoly> basis) const {
  std::lock_guard lock(cache_->mutex);
  cache_->order = order;
  cache_->basis = std::move(basis);
}

bool Ideal::has_cached_basis(const MonomialOrder& order) const {
  std::lock_guard lock(cache_->mutex);
  return cache_->order && *cache_->order == order;
}

bool Ideal::contains(const MultiPoly& f) const {
  if (f.is_zero()) return true;
  const auto order = MonomialOrder::degrevlex();
  return normal_form(f, groebner_basis(order), order).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens().begin(), other.gens().end(), [this](const MultiPoly& g) { return contains(g); });
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!same_ring(*a.ring(), *b.ring())) throw Error(ErrorCode::RingMismatch, "ideals live in different rings");
  const auto order = MonomialOrder::degrevlex();
  return a.groebner_basis(order) == b.groebner_basis(order);
}

// ---- elimination ------------------------------------------------------------

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> elim_vars, const GroebnerOptions& options) {
  const Ring& ring = ideal.ring();
  std::vector<bool> elim(ring->size(), false);
  for (std::size_t v : elim_vars) {
    if (v >= ring->size()) throw Error(ErrorCode::IndexOutOfRange, "elimination variable out of range");
    elim[v] = true;
  }
  std::vector<std::string> block_names;
  std::vector<std::string> rest_names;
  for (std::size_t i = 0; i < ring->size(); ++i) (elim[i] ? block_names : rest_names).push_back(ring->name(i));
  Ring rest = ring_new(rest_names);
  if (block_names.empty()) {
    const auto order = MonomialOrder::degrevlex();
    Ideal out(rest, ideal.gens());
    out.set_groebner_basis(order, ideal.groebner_basis(order, options));
    return out;
  }
  std::vector<std::string> all = block_names;
  all.insert(all.end(), rest_names.begin(), rest_names.end());
  Ring combined = ring_new(all);
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.gens()) gens.push_back(change_ring(g, combined));
  auto basis = groebner_basis(gens, MonomialOrder::block(block_names.size()), options);
  std::vector<MultiPoly> kept;
  for (const auto& g : basis) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < block_names.size() && free; ++i)
        if (t.monomial[i] != 0) free = false;
      if (!free) break;
    }
    if (free) kept.push_back(change_ring(g, rest));
  }
  // The surviving elements form a reduced degrevlex basis of the elimination ideal.
  std::sort(kept.begin(), kept.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return MonomialOrder::degrevlex().greater(a.leading_term().monomial, b.leading_term().monomial);
  });
  Ideal out(rest, kept);
  out.set_groebner_basis(MonomialOrder::degrevlex(), kept);
  return out;
}

namespace {

std::string fresh_name(const PolyRing& ring, const std::string& base) {
  std::string name = base;
  for (int k = 0; ring.index_of(name); ++k) name = base + std::to_string(k);
  return name;
}

}  // namespace

Ideal saturate(const Ideal& ideal, const MultiPoly& f, const GroebnerOptions& options) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroSaturand, "cannot saturate at the zero polynomial");
  if (!same_ring(*f.ring(), *ideal.ring())) throw Error(ErrorCode::RingMismatch, "saturand outside ideal ring");
  const Ring& ring = ideal.ring();
  std::vector<std::string> names{fresh_name(*ring, "@t")};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  Ring ext = ring_new(names);
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.gens()) gens.push_back(change_ring(g, ext));
  gens.push_back(MultiPoly::variable(ext, 0) * change_ring(f, ext) - MultiPoly::constant(ext, 1));
  const std::size_t t = 0;
  Ideal out = eliminate(Ideal(ext, gens), std::span<const std::size_t>(&t, 1), options);
  Ideal result(ring, out.gens());
  result.set_groebner_basis(MonomialOrder::degrevlex(), out.gens());
  return result;
}

Ideal saturate_by_variables(const Ideal& ideal, std::span<const std::size_t> vars, const GroebnerOptions& options) {
  const Ring& ring = ideal.ring();
  bool homogeneous = std::all_of(ideal.gens().begin(), ideal.gens().end(),
                                 [](const MultiPoly& g) { return g.is_homogeneous(); });
  if (!homogeneous) {
    MultiPoly prod = MultiPoly::constant(ring, 1);
    for (std::size_t v : vars) prod *= MultiPoly::variable(ring, v);
    return saturate(ideal, prod, options);
  }
  std::vector<MultiPoly> current = ideal.gens();
  for (std::size_t v : vars) {
    // Reorder so x_v is the last (smallest) variable; degrevlex then makes
    // x_v-divisibility of the leading term equivalent to divisibility of g.
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ring->size(); ++i)
      if (i != v) names.push_back(ring->name(i));
    names.push_back(ring->name(v));
    Ring moved = ring_new(names);
    std::vector<MultiPoly> gens;
    for (const auto& g : current) gens.push_back(change_ring(g, moved));
    auto basis = groebner_basis(gens, MonomialOrder::degrevlex(), options);
    const std::size_t last = ring->size() - 1;
    current.clear();
    for (const auto& g : basis) {
      Exponent low = g.terms().front().monomial[last];
      for (const auto& t : g.terms()) low = std::min(low, t.monomial[last]);
      MultiPoly divided = g;
      if (low > 0) {
        std::vector<Term> terms;
        Monomial q = Monomial::variable(ring->size(), last, low);
        for (const auto& t : g.terms()) terms.push_back({t.monomial / q, t.coeff});
        divided = MultiPoly::from_terms(moved, std::move(terms));
      }
      current.push_back(change_ring(divided, ring));
    }
  }
  return Ideal(ring, current);
}

Ideal kernel_of_map(const RingMap& phi, const GroebnerOptions& options) {
  const Ring& source = phi.source();
  const Ring& target = phi.target();
  // Combined ring: [target vars (mangled), t?] > [source vars]; the block in
  // front is eliminated.
  std::vector<std::string> names;
  for (std::size_t i = 0; i < target->size(); ++i) names.push_back("@" + std::to_string(i));
  if (phi.is_rational()) names.push_back("@t");
  const std::size_t block = names.size();
  names.insert(names.end(), source->names().begin(), source->names().end());
  Ring combined = ring_new(names);

  std::vector<MultiPoly> lift_images;
  for (std::size_t i = 0; i < target->size(); ++i) lift_images.push_back(MultiPoly::variable(combined, i));
  auto lift = [&](const MultiPoly& f) { return substitute(f, combined, lift_images); };

  std::vector<MultiPoly> gens;
  std::optional<MultiPoly> den;
  if (phi.denominator()) den = lift(*phi.denominator());
  for (std::size_t i = 0; i < source->size(); ++i) {
    MultiPoly x = MultiPoly::variable(combined, block + i);
    MultiPoly img = lift(phi.images()[i]);
    gens.push_back(den ? x * *den - img : x - img);
  }
  if (den) gens.push_back(MultiPoly::variable(combined, block - 1) * *den - MultiPoly::constant(combined, 1));

  std::vector<std::size_t> elim(block);
  std::iota(elim.begin(), elim.end(), 0);
  Ideal out = eliminate(Ideal(combined, gens), elim, options);
  std::vector<MultiPoly> kernel;
  for (const auto& g : out.gens()) kernel.push_back(change_ring(g, source));
  Ideal result(source, kernel);
  result.set_groebner_basis(MonomialOrder::degrevlex(), kernel);
  return result;
}

}  // namespace algstat
