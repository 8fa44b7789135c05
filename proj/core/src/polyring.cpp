#include "algstat/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "algstat/error.hpp"

namespace algstat {

// ---- rings ----------------------------------------------------------------

std::string normalize_var_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::string indexed_name(std::string_view base, std::span<const int> indices) {
  std::string out(base);
  out.push_back('[');
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(indices[i]);
  }
  out.push_back(']');
  return out;
}

std::string indexed_name(std::string_view base, std::initializer_list<int> indices) {
  return indexed_name(base, std::span<const int>(indices.begin(), indices.size()));
}

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
  std::size_t h = std::hash<std::size_t>{}(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    names_[i] = normalize_var_name(names_[i]);
    if (names_[i].empty()) throw Error(ErrorCode::ParseError, "empty variable name");
    if (!index_.emplace(names_[i], i).second) throw Error(ErrorCode::DuplicateName, names_[i]);
    h ^= std::hash<std::string>{}(names_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "R%zu-%016zx", names_.size(), h);
  id_ = buf;
}

Ring ring_new(std::vector<std::string> names) {
  return Ring(new PolyRing(std::move(names)));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  auto it = index_.find(normalize_var_name(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PolyRing::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw Error(ErrorCode::UnknownVariable, std::string(name));
  return *idx;
}

// ---- monomials ------------------------------------------------------------

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += other.exps_[i];
  m.degree_ += other.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] -= other.exps_[i];
  m.degree_ -= other.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m(*this);
  m.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    m.exps_[i] = std::max(exps_[i], other.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Exponent e : exps_) h = (h ^ e) * 1099511628211ULL;
  return h;
}

// ---- orders ---------------------------------------------------------------

namespace {

std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  if (lo == 0 && hi == a.size()) {
    da = a.degree();
    db = b.degree();
  } else {
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::strong_ordering compare_range(MonomialOrder::Kind kind, const Monomial& a, const Monomial& b,
                                   std::size_t lo, std::size_t hi) {
  return kind == MonomialOrder::Kind::Lex ? lex_range(a, b, lo, hi) : degrevlex_range(a, b, lo, hi);
}

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  return degrevlex_range(a, b, 0, a.size()) == std::strong_ordering::greater;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      return lex_range(a, b, 0, a.size());
    case Kind::DegRevLex:
      return degrevlex_range(a, b, 0, a.size());
    case Kind::Block: {
      std::size_t k = std::min(block_size_, a.size());
      auto first = compare_range(first_, a, b, 0, k);
      if (first != std::strong_ordering::equal) return first;
      return compare_range(second_, a, b, k, a.size());
    }
  }
  return std::strong_ordering::equal;
}

std::string to_string(const MonomialOrder& order) {
  auto name = [](MonomialOrder::Kind k) { return k == MonomialOrder::Kind::Lex ? "lex" : "degrevlex"; };
  switch (order.kind()) {
    case MonomialOrder::Kind::Lex:
      return "lex";
    case MonomialOrder::Kind::DegRevLex:
      return "degrevlex";
    case MonomialOrder::Kind::Block:
      return std::string("block(") + std::to_string(order.block_size()) + "," + name(order.first_inner()) + "," +
             name(order.second_inner()) + ")";
  }
  return "?";
}

// ---- polynomials ----------------------------------------------------------

MultiPoly MultiPoly::constant(Ring ring, const BigRat& c) {
  MultiPoly p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring->size()), c});
  return p;
}

MultiPoly MultiPoly::variable(Ring ring, std::size_t index) {
  if (index >= ring->size()) throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(index));
  MultiPoly p(ring);
  p.terms_.push_back({Monomial::variable(ring->size(), index), 1});
  return p;
}

MultiPoly MultiPoly::variable(Ring ring, std::string_view name) {
  std::size_t idx = ring->require_index(name);
  return variable(std::move(ring), idx);
}

MultiPoly MultiPoly::monomial(Ring ring, Monomial m, const BigRat& c) {
  MultiPoly p(ring);
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

MultiPoly MultiPoly::from_terms(Ring ring, std::vector<Term> terms) {
  MultiPoly p(std::move(ring));
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return degrevlex_greater(a.monomial, b.monomial); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

std::uint64_t MultiPoly::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool MultiPoly::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

BigRat MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return degrevlex_greater(t.monomial, key); });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

std::vector<std::size_t> MultiPoly::support() const {
  std::vector<std::size_t> out;
  if (!ring_) return out;
  for (std::size_t i = 0; i < ring_->size(); ++i)
    for (const auto& t : terms_)
      if (t.monomial[i] != 0) {
        out.push_back(i);
        break;
      }
  return out;
}

void MultiPoly::require_same_ring(const MultiPoly& g) const {
  if (!ring_ || !g.ring_ || !same_ring(*ring_, *g.ring_))
    throw Error(ErrorCode::RingMismatch, "operands live in different rings");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merge two degrevlex-sorted term lists, computing a + sign*b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && degrevlex_greater(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || degrevlex_greater(b[j].monomial, a[i].monomial)) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      BigRat c = sign < 0 ? BigRat(a[i].coeff - b[j].coeff) : BigRat(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& g) {
  require_same_ring(g);
  terms_ = merge_terms(terms_, g.terms_, 1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& g) {
  require_same_ring(g);
  terms_ = merge_terms(terms_, g.terms_, -1);
  return *this;
}

MultiPoly operator*(const MultiPoly& f, const MultiPoly& g) {
  f.require_same_ring(g);
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.ring_);
  if (g.terms_.size() == 1) return f.mul_monomial(g.terms_[0].monomial, g.terms_[0].coeff);
  if (f.terms_.size() == 1) return g.mul_monomial(f.terms_[0].monomial, f.terms_[0].coeff);
  std::unordered_map<Monomial, BigRat, MonomialHash> acc;
  acc.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) {
      auto [it, inserted] = acc.try_emplace(a.monomial * b.monomial, 0);
      it->second += a.coeff * b.coeff;
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  return MultiPoly::from_terms(f.ring_, std::move(terms));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& g) {
  *this = *this * g;
  return *this;
}

MultiPoly operator*(const BigRat& c, const MultiPoly& f) {
  if (c == 0) return MultiPoly(f.ring_);
  MultiPoly p(f);
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const BigRat& c) const {
  MultiPoly p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return BigRat(1 / terms_.front().coeff) * *this;
}

BigRat MultiPoly::evaluate(std::span<const BigRat> point) const {
  if (ring_ && point.size() != ring_->size())
    throw Error(ErrorCode::IndexOutOfRange, "evaluation point has wrong dimension");
  // Cache powers per variable; exponents in practice are small.
  std::vector<std::vector<BigRat>> powers(point.size());
  BigRat total = 0;
  for (const auto& t : terms_) {
    BigRat v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      Exponent e = t.monomial[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(1);
      while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
      v *= cache[e];
    }
    total += v;
  }
  return total;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring_ && b.ring_ && !same_ring(*a.ring_, *b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string to_string(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out.push_back('*');
    out += ring.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    BigRat c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out.push_back('-');
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += rat_to_string(c);
    } else {
      if (c != 1) out += rat_to_string(c) + "*";
      out += algstat::to_string(t.monomial, *ring_);
    }
  }
  return out;
}

// ---- substitution and ring maps -------------------------------------------

MultiPoly substitute(const MultiPoly& f, const Ring& target, std::span<const MultiPoly> images) {
  if (f.ring() && images.size() != f.ring()->size())
    throw Error(ErrorCode::RingMismatch, "substitution needs one image per variable");
  for (const auto& img : images)
    if (!same_ring(*img.ring(), *target)) throw Error(ErrorCode::RingMismatch, "image outside target ring");
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, Exponent e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  std::unordered_map<Monomial, BigRat, MonomialHash> acc;
  for (const auto& t : f.terms()) {
    MultiPoly term = MultiPoly::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size() && !term.is_zero(); ++i)
      if (t.monomial[i] != 0) term *= power(i, t.monomial[i]);
    for (const auto& tt : term.terms()) acc[tt.monomial] += tt.coeff;
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  return MultiPoly::from_terms(target, std::move(terms));
}

MultiPoly change_ring(const MultiPoly& f, const Ring& target) {
  if (same_ring(*f.ring(), *target)) return MultiPoly::from_terms(target, f.terms());
  const auto& src = *f.ring();
  std::vector<std::optional<std::size_t>> where(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) where[i] = target->index_of(src.name(i));
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(target->size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!where[i]) throw Error(ErrorCode::UnknownVariable, src.name(i) + " is not a variable of the target ring");
      e[*where[i]] = t.monomial[i];
    }
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return MultiPoly::from_terms(target, std::move(terms));
}

RingMap::RingMap(Ring source, Ring target, std::vector<MultiPoly> images, std::optional<MultiPoly> denominator)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)),
      denominator_(std::move(denominator)) {
  if (images_.size() != source_->size())
    throw Error(ErrorCode::RingMismatch, "ring map needs one image per source variable");
  for (const auto& img : images_)
    if (!same_ring(*img.ring(), *target_)) throw Error(ErrorCode::RingMismatch, "ring map image outside target");
  if (denominator_) {
    if (!same_ring(*denominator_->ring(), *target_))
      throw Error(ErrorCode::RingMismatch, "denominator outside target ring");
    if (denominator_->is_zero()) throw Error(ErrorCode::ZeroSaturand, "ring map denominator is zero");
  }
}

RingMap RingMap::identity(const Ring& ring) {
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < ring->size(); ++i) images.push_back(MultiPoly::variable(ring, i));
  return RingMap(ring, ring, std::move(images));
}

MultiPoly RingMap::apply(const MultiPoly& f) const {
  if (!same_ring(*f.ring(), *source_)) throw Error(ErrorCode::RingMismatch, "argument not in map source");
  if (denominator_) throw Error(ErrorCode::UnsupportedAlgorithm, "rational map needs apply_rational");
  return substitute(f, target_, images_);
}

RationalImage RingMap::apply_rational(const MultiPoly& f) const {
  if (!same_ring(*f.ring(), *source_)) throw Error(ErrorCode::RingMismatch, "argument not in map source");
  if (!denominator_) return {substitute(f, target_, images_), 0};
  const auto d = static_cast<unsigned>(f.total_degree());
  std::vector<MultiPoly> den_powers{MultiPoly::constant(target_, 1)};
  while (den_powers.size() <= d) den_powers.push_back(den_powers.back() * *denominator_);
  // Group terms by degree so each homogeneous slice is substituted once.
  std::map<unsigned, std::vector<Term>> by_degree;
  for (const auto& t : f.terms()) by_degree[static_cast<unsigned>(t.monomial.degree())].push_back(t);
  MultiPoly numerator(target_);
  for (auto& [deg, terms] : by_degree) {
    MultiPoly slice = MultiPoly::from_terms(source_, std::move(terms));
    numerator += substitute(slice, target_, images_) * den_powers[d - deg];
  }
  return {std::move(numerator), d};
}

bool RingMap::annihilates(const MultiPoly& f) const { return apply_rational(f).numerator.is_zero(); }

bool operator==(const RingMap& a, const RingMap& b) {
  return same_ring(*a.source_, *b.source_) && same_ring(*a.target_, *b.target_) && a.images_ == b.images_ &&
         a.denominator_ == b.denominator_;
}

}  // namespace algstat
