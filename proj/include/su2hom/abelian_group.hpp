#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace su2hom {

/// A finitely generated abelian group Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_s in canonical
/// invariant-factor form (every d_i >= 2, d_i | d_{i+1}).
///
/// The torsion chain is stored run-length encoded so that groups such as
/// (Z/2)^(2^60), which the closed-form tables produce for large n, stay
/// representable. Two groups are isomorphic iff they compare equal.
class AbelianGroup {
 public:
  /// `multiplicity` consecutive copies of Z/order in the invariant-factor chain.
  struct TorsionRun {
    mpz_class order;
    mpz_class multiplicity;

    bool operator==(const TorsionRun&) const = default;
  };

  /// The trivial group.
  AbelianGroup() = default;

  static AbelianGroup free(mpz_class rank);
  /// Z/order; order 0 gives Z and order 1 the trivial group.
  static AbelianGroup cyclic(const mpz_class& order);
  /// Z^rank ⊕ (⊕_i Z/orders[i]) for arbitrary orders (unsorted, possibly
  /// 0, 1 or negative; the absolute value is used and 0 means Z).
  static AbelianGroup from_cyclic_orders(mpz_class rank,
                                         std::span<const mpz_class> orders);
  /// Canonicalizes a list of runs with arbitrary positive orders.
  static AbelianGroup from_runs(mpz_class rank, std::vector<TorsionRun> runs);

  const mpz_class& free_rank() const { return free_rank_; }
  const std::vector<TorsionRun>& torsion_runs() const { return torsion_; }

  /// Total number of invariant factors (counted with multiplicity).
  mpz_class torsion_count() const;
  /// The expanded invariant-factor chain. Throws std::length_error when the
  /// chain has more than `limit` entries.
  std::vector<mpz_class> invariant_factors(std::size_t limit = std::size_t{1} << 20) const;

  /// Number of invariant factors divisible by p, i.e. dim (G ⊗ F_p) minus the
  /// free rank.
  mpz_class p_torsion_rank(const mpz_class& p) const;
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }
  AbelianGroup torsion_subgroup() const;

  /// Prime-power cyclic orders with multiplicity, ascending. Factors are
  /// split by trial division; a cofactor that resists it is kept whole.
  std::vector<TorsionRun> primary_decomposition() const;

  /// Invariant-factor rendering, e.g. "Z ⊕ Z ⊕ Z/2" or "Z^6 ⊕ (Z/2)^10".
  /// `generator` names the free summand ("Z", "Q", "F2", ...).
  std::string to_string(const std::string& generator = "Z") const;
  /// Same, with the torsion written in primary form.
  std::string to_primary_string(const std::string& generator = "Z") const;

  AbelianGroup operator+(const AbelianGroup& other) const;
  AbelianGroup& operator+=(const AbelianGroup& other);
  /// Direct sum of `copies` copies.
  AbelianGroup repeated(const mpz_class& copies) const;

  bool operator==(const AbelianGroup&) const = default;

 private:
  mpz_class free_rank_ = 0;
  std::vector<TorsionRun> torsion_;
};

std::ostream& operator<<(std::ostream& os, const AbelianGroup& group);

/// Splits n > 0 into prime powers (p, e); see primary_decomposition().
std::vector<std::pair<mpz_class, unsigned long>> factor_prime_powers(mpz_class n);

}  // namespace su2hom
