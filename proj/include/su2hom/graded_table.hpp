#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "su2hom/abelian_group.hpp"

namespace su2hom {

/// Coefficient ring for (co)homology: Z, Q or F_p.
class Coefficients {
 public:
  enum class Kind { integers, rationals, prime_field };

  static Coefficients integers() { return Coefficients(Kind::integers, 0); }
  static Coefficients rationals() { return Coefficients(Kind::rationals, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static Coefficients prime_field(std::uint64_t p);
  /// Accepts "Z", "Q", "F<p>" and "Fp:<p>".
  static Coefficients parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_field() const { return kind_ != Kind::integers; }
  /// 0 for Z and Q.
  std::uint64_t characteristic() const { return prime_; }
  /// "Z", "Q", "F2", ...
  std::string name() const;

  bool operator==(const Coefficients&) const = default;

 private:
  Coefficients(Kind kind, std::uint64_t prime) : kind_(kind), prime_(prime) {}
  Kind kind_;
  std::uint64_t prime_;
};

/// Degree-indexed groups of a (co)homology theory. Trivial degrees are never
/// stored, so omitted and explicitly trivial entries compare equal. Over a
/// field every group is free and its rank is the dimension.
class GradedGroupTable {
 public:
  GradedGroupTable(Coefficients coefficients, bool reduced) : coefficients_(coefficients), reduced_(reduced) {}

  const Coefficients& coefficients() const { return coefficients_; }
  bool reduced() const { return reduced_; }
  const std::map<int, AbelianGroup>& groups() const { return groups_; }

  /// The group in degree j (trivial if absent).
  const AbelianGroup& at(int j) const;
  void set(int j, AbelianGroup group);
  /// Replaces the group in degree j by its direct sum with `group`.
  void add(int j, const AbelianGroup& group);

  GradedGroupTable& operator+=(const GradedGroupTable& other);
  GradedGroupTable repeated(const mpz_class& copies) const;

  std::optional<int> top_degree() const;
  std::optional<int> bottom_degree() const;
  /// Σ_j (-1)^j free_rank(j).
  mpz_class euler_characteristic() const;

  /// Adds one copy of the coefficient ring in degree 0 (connected spaces).
  GradedGroupTable unreduced() const;

  bool operator==(const GradedGroupTable&) const = default;

 private:
  Coefficients coefficients_;
  bool reduced_;
  std::map<int, AbelianGroup> groups_;
};

/// Field-coefficient cohomology from an integral cohomology table:
/// H^j(X; F) ≅ H^j(X; Z) ⊗ F ⊕ Tor(H^{j+1}(X; Z), F).
GradedGroupTable change_coefficients(const GradedGroupTable& integral, const Coefficients& target);

/// Integral homology read off an integral cohomology table: H_j has the free
/// rank of H^j and the torsion of H^{j+1}.
GradedGroupTable homology_from_cohomology(const GradedGroupTable& integral_cohomology);

}  // namespace su2hom
