#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "algstat/polyring.hpp"

namespace algstat {

struct GroebnerOptions {
  /// Abort with DegreeBudgetExceeded once a critical pair of larger lcm
  /// degree is selected.
  std::optional<std::uint64_t> degree_cap;
};

/// Leading monomial/coefficient of f under `order`.
const Term& leading_term(const MultiPoly& f, const MonomialOrder& order);

/// Fully reduced remainder of f modulo G (division algorithm).
MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis, const MonomialOrder& order);

/// Reduced Groebner basis: monic, inter-reduced, sorted by leading monomial
/// (descending under `order`).
std::vector<MultiPoly> groebner_basis(std::span<const MultiPoly> gens, const MonomialOrder& order,
                                      const GroebnerOptions& options = {});

class Ideal {
 public:
  explicit Ideal(Ring ring, std::vector<MultiPoly> gens = {});

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<MultiPoly>& gens() const noexcept { return gens_; }

  /// Reduced basis under `order`; the most recent result is cached.
  const std::vector<MultiPoly>& groebner_basis(const MonomialOrder& order = MonomialOrder::degrevlex(),
                                               const GroebnerOptions& options = {}) const;
  /// Installs a known reduced basis (e.g. from elimination) into the cache.
  void set_groebner_basis(const MonomialOrder& order, std::vector<MultiPoly> basis) const;
  bool has_cached_basis(const MonomialOrder& order) const;

  bool contains(const MultiPoly& f) const;
  bool contains(const Ideal& other) const;
  bool is_zero() const;

  /// Same ring and generator list (not ideal equality; see ideal_equal).
  friend bool operator==(const Ideal& a, const Ideal& b) {
    return same_ring(*a.ring_, *b.ring_) && a.gens_ == b.gens_;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<MonomialOrder> order;
    std::vector<MultiPoly> basis;
  };

  Ring ring_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_equal(const Ideal& a, const Ideal& b);

/// I ∩ Q[remaining variables], returned in the ring of the remaining
/// variables (original order). Uses a block order with `elim_vars` first.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> elim_vars, const GroebnerOptions& options = {});

/// I : f^∞ via one extra variable t and elimination of t.
Ideal saturate(const Ideal& ideal, const MultiPoly& f, const GroebnerOptions& options = {});

/// I : (x_{i1} ... x_{ik})^∞, one variable at a time. Homogeneous ideals use
/// a reverse-lex basis with x_i last and divide out x_i; others fall back to
/// `saturate`.
Ideal saturate_by_variables(const Ideal& ideal, std::span<const std::size_t> vars,
                            const GroebnerOptions& options = {});

/// Kernel of a (possibly rational) ring map by elimination from its graph.
Ideal kernel_of_map(const RingMap& phi, const GroebnerOptions& options = {});

}  // namespace algstat
