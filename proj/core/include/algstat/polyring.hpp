#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algstat/exactnum.hpp"

namespace algstat {

class PolyRing;
using Ring = std::shared_ptr<const PolyRing>;

/// Ordered, immutable list of variable names. Names like `q[2,3,4]` are stored
/// with whitespace removed so `s[1, 2]` and `s[1,2]` denote the same variable.
class PolyRing {
 public:
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;
  /// Stable identifier derived from the variable list.
  const std::string& id() const noexcept { return id_; }

  friend bool same_ring(const PolyRing& a, const PolyRing& b) noexcept {
    return &a == &b || a.names_ == b.names_;
  }

 private:
  friend Ring ring_new(std::vector<std::string> names);
  explicit PolyRing(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::string id_;
};

Ring ring_new(std::vector<std::string> names);
std::string normalize_var_name(std::string_view name);
/// `base[i1,i2,...]`
std::string indexed_name(std::string_view base, std::span<const int> indices);
std::string indexed_name(std::string_view base, std::initializer_list<int> indices);

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// Requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }
  /// Plain lexicographic comparison of exponent vectors; used for containers only.
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept { return a.exps_ < b.exps_; }

  std::size_t hash() const noexcept;

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// lex, degrevlex, or a two-block product order whose leading block (the
/// first `block_size` variables) dominates.
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0, Kind::Lex, Kind::Lex); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0, Kind::DegRevLex, Kind::DegRevLex); }
  static MonomialOrder block(std::size_t block_size, Kind first = Kind::DegRevLex, Kind second = Kind::DegRevLex) {
    return MonomialOrder(Kind::Block, block_size, first, second);
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t block_size() const noexcept { return block_size_; }
  Kind first_inner() const noexcept { return first_; }
  Kind second_inner() const noexcept { return second_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == std::strong_ordering::greater; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block, Kind first, Kind second)
      : kind_(kind), block_size_(block), first_(first), second_(second) {}

  Kind kind_;
  std::size_t block_size_;
  Kind first_;
  Kind second_;
};

std::string to_string(const MonomialOrder& order);

struct Term {
  Monomial monomial;
  BigRat coeff;
};

/// Sparse polynomial with rational coefficients. Terms are kept sorted in
/// degrevlex-descending order with no zero coefficients, so equality is
/// structural and printing is canonical.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(Ring ring, const BigRat& c);
  static MultiPoly variable(Ring ring, std::size_t index);
  static MultiPoly variable(Ring ring, std::string_view name);
  static MultiPoly monomial(Ring ring, Monomial m, const BigRat& c = 1);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static MultiPoly from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  std::uint64_t total_degree() const noexcept;
  bool is_homogeneous() const noexcept;
  /// Leading term under degrevlex.
  const Term& leading_term() const { return terms_.front(); }
  /// Coefficient of a monomial (0 if absent).
  BigRat coefficient(const Monomial& m) const;
  /// Variables with nonzero exponent somewhere.
  std::vector<std::size_t> support() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& g);
  MultiPoly& operator-=(const MultiPoly& g);
  MultiPoly& operator*=(const MultiPoly& g);

  friend MultiPoly operator+(MultiPoly f, const MultiPoly& g) { return f += g; }
  friend MultiPoly operator-(MultiPoly f, const MultiPoly& g) { return f -= g; }
  friend MultiPoly operator*(const MultiPoly& f, const MultiPoly& g);
  friend MultiPoly operator*(const BigRat& c, const MultiPoly& f);
  MultiPoly mul_monomial(const Monomial& m, const BigRat& c) const;
  MultiPoly pow(unsigned e) const;
  /// Divides by the leading coefficient (degrevlex).
  MultiPoly monic() const;

  BigRat evaluate(std::span<const BigRat> point) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  std::string to_string() const;

 private:
  void require_same_ring(const MultiPoly& g) const;

  Ring ring_;
  std::vector<Term> terms_;
};

std::string to_string(const Monomial& m, const PolyRing& ring);

/// Grammar: sum of signed terms; a term is a product (`*` or juxtaposition)
/// of rationals (`3`, `1//4`) and variables with optional `^e`. Parentheses
/// group sub-expressions.
MultiPoly parse_poly(const Ring& ring, std::string_view text);

struct RationalImage {
  MultiPoly numerator;
  unsigned denominator_power = 0;
};

/// Homomorphism source -> target; x_i maps to images[i] / denominator when a
/// denominator is present. One shared denominator serves all images.
class RingMap {
 public:
  RingMap(Ring source, Ring target, std::vector<MultiPoly> images,
          std::optional<MultiPoly> denominator = std::nullopt);

  static RingMap identity(const Ring& ring);

  const Ring& source() const noexcept { return source_; }
  const Ring& target() const noexcept { return target_; }
  const std::vector<MultiPoly>& images() const noexcept { return images_; }
  const std::optional<MultiPoly>& denominator() const noexcept { return denominator_; }
  bool is_rational() const noexcept { return denominator_.has_value(); }

  /// Polynomial maps only.
  MultiPoly apply(const MultiPoly& f) const;
  /// f(num/den) = numerator / den^power with power = deg(f).
  RationalImage apply_rational(const MultiPoly& f) const;
  /// True iff the numerator of the image vanishes.
  bool annihilates(const MultiPoly& f) const;

  friend bool operator==(const RingMap& a, const RingMap& b);

 private:
  Ring source_;
  Ring target_;
  std::vector<MultiPoly> images_;
  std::optional<MultiPoly> denominator_;
};

/// Substitutes `images[i]` (polynomials in `target`) for variable i of f.
MultiPoly substitute(const MultiPoly& f, const Ring& target, std::span<const MultiPoly> images);

/// Moves f into `target` by variable name. Throws UnknownVariable if a used
/// variable is missing there.
MultiPoly change_ring(const MultiPoly& f, const Ring& target);

}  // namespace algstat
