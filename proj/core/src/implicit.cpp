#include "algstat/implicit.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "algstat/error.hpp"

namespace algstat {

// ---- grading group ----------------------------------------------------------

GradingGroup::GradingGroup(std::size_t ambient_rank, IntMatrix relations)
    : m_(ambient_rank), relations_(std::move(relations)) {
  if (relations_.rows() > 0 && relations_.cols() != m_)
    throw Error(ErrorCode::IndexOutOfRange, "relation width does not match ambient rank");
  if (relations_.rows() == 0) {
    snf_.S = IntMatrix(0, m_);
    snf_.U = IntMatrix(0, 0);
    snf_.V = IntMatrix::identity(m_);
    snf_.rank = 0;
  } else {
    snf_ = smith_normal_form(relations_);
  }
  for (std::size_t i = 0; i < snf_.rank; ++i)
    if (snf_.S(i, i) != 1) {
      torsion_index_.push_back(i);
      torsion_.push_back(snf_.S(i, i));
    }
  free_rank_ = m_ - snf_.rank;
}

GradingGroup::Element GradingGroup::element(const std::vector<BigInt>& v) const {
  if (v.size() != m_) throw Error(ErrorCode::IndexOutOfRange, "exponent vector has the wrong length");
  // w = V^T v; only the torsion and free coordinates are kept.
  Element e;
  e.reserve(element_size());
  auto coord = [&](std::size_t c) {
    BigInt s = 0;
    for (std::size_t r = 0; r < m_; ++r)
      if (v[r] != 0) s += snf_.V(r, c) * v[r];
    return s;
  };
  for (std::size_t i : torsion_index_) e.push_back(coord(i));
  for (std::size_t c = snf_.rank; c < m_; ++c) e.push_back(coord(c));
  return reduce(std::move(e));
}

GradingGroup::Element GradingGroup::reduce(Element e) const {
  for (std::size_t t = 0; t < torsion_.size(); ++t) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), e[t].get_mpz_t(), torsion_[t].get_mpz_t());
    e[t] = r;
  }
  return e;
}

GradingGroup::Element GradingGroup::add(const Element& a, const Element& b) const {
  Element e(a);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b[i];
  return reduce(std::move(e));
}

GradingGroup::Element GradingGroup::scale(const Element& a, const BigInt& k) const {
  Element e(a);
  for (auto& x : e) x *= k;
  return reduce(std::move(e));
}

std::string to_string(const GradingGroup::Element& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += " ";
    out += e[i].get_str();
  }
  return out + "]";
}

// ---- maximal grading --------------------------------------------------------

namespace {

std::vector<BigInt> exponent_vector(const Monomial& m) {
  std::vector<BigInt> v(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) v[i] = m[i];
  return v;
}

}  // namespace

MaximalGrading maximal_grading(const RingMap& phi) {
  if (phi.is_rational()) throw Error(ErrorCode::UnsupportedAlgorithm, "multigraded implicitization needs a polynomial map");
  const std::size_t m = phi.target()->size();
  std::vector<std::vector<BigInt>> rows;
  MaximalGrading out;
  for (std::size_t i = 0; i < phi.images().size(); ++i) {
    const auto& terms = phi.images()[i].terms();
    if (terms.empty()) {
      out.zero_images.push_back(i);
      continue;
    }
    for (std::size_t k = 1; k < terms.size(); ++k) {
      std::vector<BigInt> r(m);
      for (std::size_t c = 0; c < m; ++c)
        r[c] = BigInt(terms[k].monomial[c]) - BigInt(terms[0].monomial[c]);
      rows.push_back(std::move(r));
    }
  }
  IntMatrix rel(rows.size(), m);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m; ++c) rel(r, c) = rows[r][c];
  out.group = GradingGroup(m, std::move(rel));
  for (const auto& img : phi.images())
    out.degrees.push_back(img.is_zero() ? out.group.zero() : out.group.element(exponent_vector(img.terms()[0].monomial)));
  return out;
}

GradingGroup::Element degree_of(const MaximalGrading& g, const Monomial& m) {
  GradingGroup::Element e = g.group.zero();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) e = g.group.add(e, g.group.scale(g.degrees[i], m[i]));
  return e;
}

// ---- graded components ------------------------------------------------------

namespace {

// Primitive integer multiple with positive leading coefficient.
MultiPoly primitive(const MultiPoly& f) {
  if (f.is_zero()) return f;
  BigInt l = 1;
  BigInt g = 0;
  for (const auto& t : f.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  for (const auto& t : f.terms()) {
    BigInt n = t.coeff.get_num() * (l / t.coeff.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  BigRat scale(l, g);
  scale.canonicalize();
  if (f.leading_term().coeff < 0) scale = -scale;
  return scale * f;
}

class ImageCache {
 public:
  explicit ImageCache(const RingMap& phi) : phi_(phi) {}

  const MultiPoly& image(const Monomial& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    MultiPoly value(phi_.target());
    if (m.is_one()) {
      value = MultiPoly::constant(phi_.target(), 1);
    } else {
      std::size_t last = m.size();
      while (m[last - 1] == 0) --last;
      Monomial rest = m / Monomial::variable(m.size(), last - 1);
      value = image(rest) * phi_.images()[last - 1];
    }
    return memo_.emplace(m, std::move(value)).first->second;
  }

 private:
  const RingMap& phi_;
  std::unordered_map<Monomial, MultiPoly, MonomialHash> memo_;
};

struct Bucket {
  GradingGroup::Element degree;
  std::vector<Monomial> monomials;  // in enumeration order
};

// Kernel of φ restricted to span(monomials) as polynomials, plus the
// minimal part relative to `shifted` (polynomials in the same span).
GradedComponent solve_component(const RingMap& phi, const std::vector<Monomial>& monomials,
                                const std::vector<MultiPoly>& shifted, ImageCache& cache) {
  GradedComponent out;
  const Ring& src = phi.source();
  // Coefficient matrix: rows = parameter monomials, columns = source monomials.
  std::map<Monomial, std::size_t> row_of;
  std::vector<const MultiPoly*> images;
  for (const auto& mon : monomials) {
    images.push_back(&cache.image(mon));
    for (const auto& t : images.back()->terms()) row_of.emplace(t.monomial, row_of.size());
  }
  RatMatrix a(row_of.size(), monomials.size());
  for (std::size_t c = 0; c < monomials.size(); ++c)
    for (const auto& t : images[c]->terms()) a(row_of.at(t.monomial), c) = t.coeff;
  auto null = rational_nullspace(a);
  if (null.empty()) return out;

  auto to_poly = [&](const std::vector<BigRat>& v) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) terms.push_back({monomials[c], v[c]});
    return MultiPoly::from_terms(src, std::move(terms));
  };
  for (const auto& v : null) out.basis.push_back(primitive(to_poly(v)));

  // Greedy completion of span(shifted) by kernel vectors.
  std::map<Monomial, std::size_t> col_of;
  for (std::size_t c = 0; c < monomials.size(); ++c) col_of.emplace(monomials[c], c);
  std::vector<std::vector<BigRat>> span;
  auto vec_of = [&](const MultiPoly& f) {
    std::vector<BigRat> v(monomials.size());
    for (const auto& t : f.terms()) v[col_of.at(t.monomial)] = t.coeff;
    return v;
  };
  auto rank_of = [&](const std::vector<std::vector<BigRat>>& rows) {
    if (rows.empty()) return std::size_t{0};
    RatMatrix m(rows.size(), monomials.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < monomials.size(); ++c) m(r, c) = rows[r][c];
    return rref(m).size();
  };
  for (const auto& f : shifted) span.push_back(vec_of(f));
  std::size_t current = rank_of(span);
  if (current == null.size()) return out;
  for (std::size_t k = 0; k < null.size(); ++k) {
    span.push_back(null[k]);
    std::size_t r = rank_of(span);
    if (r > current) {
      current = r;
      out.minimal.push_back(out.basis[k]);
      if (current == null.size()) break;
    } else {
      span.pop_back();
    }
  }
  return out;
}

std::vector<MultiPoly> shifts_into(const MaximalGrading& grading, const GradingGroup::Element& b,
                                   const KernelTable& known, const Ring& src) {
  std::vector<MultiPoly> out;
  for (const auto& [deg, polys] : known)
    for (std::size_t j = 0; j < src->size(); ++j) {
      if (grading.group.add(deg, grading.degrees[j]) != b) continue;
      Monomial xj = Monomial::variable(src->size(), j);
      for (const auto& g : polys) out.push_back(g.mul_monomial(xj, 1));
    }
  return out;
}

void enumerate_monomials(std::size_t nvars, unsigned d, std::vector<Monomial>& out) {
  std::vector<Exponent> exps(nvars, 0);
  // Lexicographically descending exponent vectors of total degree d.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      exps[i] = left;
      out.emplace_back(exps);
      exps[i] = 0;
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      exps[i] = e;
      rec(i + 1, left - e);
    }
    exps[i] = 0;
  };
  if (nvars == 0) return;
  rec(0, d);
}

std::vector<Bucket> buckets_of_degree(const MaximalGrading& grading, std::size_t nvars, unsigned d) {
  std::vector<Monomial> monomials;
  enumerate_monomials(nvars, d, monomials);
  std::map<GradingGroup::Element, std::size_t> index;
  std::vector<Bucket> buckets;
  for (auto& m : monomials) {
    auto deg = degree_of(grading, m);
    auto [it, fresh] = index.emplace(deg, buckets.size());
    if (fresh) buckets.push_back({deg, {}});
    buckets[it->second].monomials.push_back(std::move(m));
  }
  std::sort(buckets.begin(), buckets.end(), [](const Bucket& a, const Bucket& b) { return a.degree < b.degree; });
  return buckets;
}

bool has_zero_factor(const Monomial& m, const MaximalGrading& g) {
  return std::any_of(g.zero_images.begin(), g.zero_images.end(), [&](std::size_t i) { return m[i] != 0; });
}

}  // namespace

GradedComponent graded_component(const RingMap& phi, const MaximalGrading& grading, const GradingGroup::Element& b,
                                 unsigned d, const KernelTable& known) {
  if (d == 0) throw Error(ErrorCode::IndexOutOfRange, "total degree must be at least 1");
  std::vector<Monomial> monomials;
  enumerate_monomials(phi.source()->size(), d, monomials);
  std::vector<Monomial> in_bucket;
  for (auto& m : monomials)
    if (degree_of(grading, m) == b) in_bucket.push_back(std::move(m));
  if (in_bucket.empty()) return {};
  ImageCache cache(phi);
  return solve_component(phi, in_bucket, shifts_into(grading, b, known, phi.source()), cache);
}

std::size_t GradedKernelResult::generator_count() const {
  std::size_t n = 0;
  for (const auto& [k, v] : components) n += v.size();
  return n;
}

std::size_t GradedKernelResult::generator_count(unsigned total_degree) const {
  std::size_t n = 0;
  for (const auto& [k, v] : components)
    for (const auto& f : v)
      if (f.total_degree() == total_degree) ++n;
  return n;
}

std::vector<MultiPoly> GradedKernelResult::generators() const {
  std::vector<MultiPoly> out;
  for (const auto& [k, v] : components) out.insert(out.end(), v.begin(), v.end());
  return out;
}

GradedKernelResult components_of_kernel(unsigned d, const RingMap& phi, const ImplicitOptions& options) {
  GradedKernelResult result;
  result.grading = maximal_grading(phi);
  result.max_total_degree = d;
  const Ring& src = phi.source();
  const unsigned workers = std::max(1U, options.workers);

  KernelTable previous;  // full kernel of total degree k-1
  for (unsigned k = 1; k <= d; ++k) {
    std::vector<Bucket> buckets = buckets_of_degree(result.grading, src->size(), k);
    // A singleton bucket holds a kernel element only if its image vanishes.
    std::vector<std::size_t> work;
    for (std::size_t i = 0; i < buckets.size(); ++i)
      if (buckets[i].monomials.size() > 1 || has_zero_factor(buckets[i].monomials.front(), result.grading))
        work.push_back(i);

    std::vector<GradedComponent> solved(work.size());
    std::atomic<std::size_t> next{0};
    auto run = [&] {
      // Each worker keeps its own image memo; tasks share nothing mutable.
      ImageCache cache(phi);
      for (std::size_t t; (t = next.fetch_add(1)) < work.size();) {
        const Bucket& bk = buckets[work[t]];
        solved[t] = solve_component(phi, bk.monomials, shifts_into(result.grading, bk.degree, previous, src), cache);
      }
    };
    if (workers == 1 || work.size() < 2) {
      run();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < std::min<std::size_t>(workers, work.size()); ++w) pool.emplace_back(run);
      for (auto& th : pool) th.join();
    }

    KernelTable current;
    for (std::size_t t = 0; t < work.size(); ++t) {
      const auto& deg = buckets[work[t]].degree;
      if (!solved[t].basis.empty()) current[deg] = std::move(solved[t].basis);
      if (!solved[t].minimal.empty()) {
        auto& dst = result.components[deg];
        dst.insert(dst.end(), solved[t].minimal.begin(), solved[t].minimal.end());
      }
    }
    previous = std::move(current);
  }
  return result;
}

}  // namespace algstat
