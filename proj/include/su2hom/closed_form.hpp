#pragma once

#include <string>
#include <vector>

#include "su2hom/graded_table.hpp"

namespace su2hom {

mpz_class binomial(unsigned long n, unsigned long k);

/// Graded dimensions Σ c_j t^j.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  explicit PoincarePolynomial(std::vector<mpz_class> coefficients);

  /// Coefficient of t^j (0 beyond the stored range). Trailing zeros are trimmed.
  const std::vector<mpz_class>& coefficients() const { return coefficients_; }
  mpz_class coefficient(int j) const;
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  mpz_class evaluate(const mpz_class& t) const;
  /// "1 + 3t^2 + 3t^3 + t^5"
  std::string to_string() const;

  bool operator==(const PoincarePolynomial&) const = default;

 private:
  std::vector<mpz_class> coefficients_;
};

enum class SplittingPiece {
  sphere3,                 // k = 1: S^3
  sphere2_wedge_stunted,   // k = 2: S^2 ∨ RP^4/RP^2
  sigma_rp2_wedge_stunted  // k >= 3: ΣRP^2 ∨ RP^{k+2}/RP^{k-1}
};

/// One wedge summand C(n,k) · ΣS(kL) of the suspension splitting.
struct SplittingSummand {
  int k;
  mpz_class multiplicity;
  SplittingPiece piece;
};

std::string to_string(SplittingPiece piece);

/// Reduced integral cohomology of RP^{k+2}/RP^{k-1}, k >= 1: Z in degree
/// k + 1 - (-1)^k and Z/2 in degree k + (3 + (-1)^k)/2.
GradedGroupTable stunted_display(int k);

/// The stunted wedge summand of ΣS(kL), k >= 2: RP^4/RP^2 (only Z/2 in
/// degree 4) for k = 2, and stunted_display(k) for k >= 3.
GradedGroupTable stunted_cohomology_closed_form(int k);

/// Reduced integral cohomology of ΣS(kL), k >= 1.
GradedGroupTable sigma_skl_closed_form(int k);

std::vector<SplittingSummand> splitting_summands(int n);

/// H^*(Hom(Z^n, SU(2)); coeff), unreduced, assembled from the splitting.
GradedGroupTable commuting_tuple_cohomology(int n, const Coefficients& coeff = Coefficients::integers());

/// Counts the τ-invariant monomials s^ε x_S of H^*(S^2 × T^n; Q), where τ
/// negates the degree-2 class s and every degree-1 class x_i.
PoincarePolynomial rational_poincare_by_monomials(int n);
/// ((1+t)^n + (1-t)^n)/2 + t^2 ((1+t)^n - (1-t)^n)/2.
PoincarePolynomial rational_poincare_by_generating_function(int n);
/// Both routes; throws std::logic_error if they differ.
PoincarePolynomial rational_poincare(int n);

struct VerificationItem {
  std::string check;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  int max_n;
  int max_k;
  std::vector<VerificationItem> items;

  bool all_passed() const;
  std::size_t passed_count() const;
};

/// Cross-checks closed forms against the chain-level models:
///   block k         sigma_skl_closed_form(k) vs H̃^*(ΣS(kL)) from chains, k <= max_k
///   splitting n     commuting_tuple_cohomology(n) vs the wedge model, n <= max_n
///   mod2 n          F2 table by universal coefficients vs mod-2 chains on the wedge
///   rational n      free ranks vs rational_poincare(n), plus both Poincaré routes
///   golden Y[3]     the reference n = 3 table (when max_n >= 3)
/// Failures (including exceptions) become report entries.
VerificationReport verify_all(int max_n, int max_k);

/// The reference H^*(Hom(Z^3, SU(2)); Z).
GradedGroupTable golden_y3_table();

}  // namespace su2hom
