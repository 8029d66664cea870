#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "su2hom/exact_linalg.hpp"
#include "su2hom/graded_table.hpp"

namespace su2hom {

/// a + b·τ in the integral group ring of Z/2 (τ² = 1).
struct GroupRingElement {
  mpz_class identity = 0;
  mpz_class tau = 0;

  GroupRingElement() = default;
  GroupRingElement(mpz_class a, mpz_class b = 0) : identity(std::move(a)), tau(std::move(b)) {}

  static GroupRingElement generator() { return {0, 1}; }

  /// The augmentation τ ↦ 1.
  mpz_class augmentation() const { return identity + tau; }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    identity += o.identity;
    tau += o.tau;
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement x, const GroupRingElement& y) { return x += y; }
  friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
    return {x.identity * y.identity + x.tau * y.tau, x.identity * y.tau + x.tau * y.identity};
  }
  bool operator==(const GroupRingElement&) const = default;
};

using GroupRingMatrix = DenseMatrix<GroupRingElement>;

/// A bounded chain complex of free modules over `Entry` (Z, or Z[Z/2] for
/// the equivariant complexes). Degrees run over [min_degree, max_degree];
/// boundary(j) maps degree j to degree j-1 and has shape rank(j-1) × rank(j).
template <class Entry>
class BasicChainComplex {
 public:
  using Matrix = DenseMatrix<Entry>;

  BasicChainComplex() : BasicChainComplex(0, {}, {}) {}

  /// `boundaries[i]` is the boundary out of degree min_degree + i + 1.
  BasicChainComplex(int min_degree, std::vector<std::size_t> ranks, std::vector<Matrix> boundaries,
                    std::optional<std::size_t> basepoint = std::nullopt)
      : min_degree_(min_degree), ranks_(std::move(ranks)), basepoint_(basepoint) {
    if (boundaries.size() + 1 != std::max<std::size_t>(ranks_.size(), 1)) {
      throw std::invalid_argument("chain complex needs one boundary per adjacent pair of degrees");
    }
    boundaries_.reserve(ranks_.size() + 1);
    boundaries_.emplace_back(0, ranks_.empty() ? 0 : ranks_.front());
    for (std::size_t i = 0; i + 1 < ranks_.size(); ++i) {
      if (boundaries[i].rows() != ranks_[i] || boundaries[i].cols() != ranks_[i + 1]) {
        throw std::invalid_argument("boundary shape inconsistent with ranks");
      }
      boundaries_.push_back(std::move(boundaries[i]));
    }
    boundaries_.emplace_back(ranks_.empty() ? 0 : ranks_.back(), 0);
    if (basepoint_ && (min_degree_ > 0 || max_degree() < 0 || *basepoint_ >= rank(0))) {
      throw std::invalid_argument("basepoint must index a 0-cell");
    }
  }

  int min_degree() const { return min_degree_; }
  /// min_degree - 1 for the zero complex.
  int max_degree() const { return min_degree_ + static_cast<int>(ranks_.size()) - 1; }

  std::size_t rank(int j) const {
    if (j < min_degree_ || j > max_degree()) return 0;
    return ranks_[static_cast<std::size_t>(j - min_degree_)];
  }
  std::size_t total_rank() const {
    std::size_t n = 0;
    for (auto r : ranks_) n += r;
    return n;
  }

  /// ∂_j : C_j → C_{j-1}; an empty matrix of the right shape outside the support.
  const Matrix& boundary(int j) const {
    static const Matrix kEmpty;
    if (j < min_degree_ || j > max_degree() + 1) return kEmpty;
    return boundaries_[static_cast<std::size_t>(j - min_degree_)];
  }

  const std::optional<std::size_t>& basepoint() const { return basepoint_; }
  bool is_based() const { return basepoint_.has_value(); }

  BasicChainComplex with_basepoint(std::optional<std::size_t> cell) const {
    BasicChainComplex c = *this;
    if (cell && (min_degree_ > 0 || max_degree() < 0 || *cell >= rank(0))) {
      throw std::invalid_argument("basepoint must index a 0-cell");
    }
    c.basepoint_ = cell;
    return c;
  }

  /// Mutable access for constructors and mutation tests; does not re-verify.
  Matrix& mutable_boundary(int j) {
    if (j < min_degree_ || j > max_degree() + 1) throw std::out_of_range("boundary degree out of range");
    return boundaries_[static_cast<std::size_t>(j - min_degree_)];
  }

 private:
  int min_degree_;
  std::vector<std::size_t> ranks_;
  std::vector<Matrix> boundaries_;  // degrees min_degree .. max_degree + 1
  std::optional<std::size_t> basepoint_;
};

using ChainComplex = BasicChainComplex<mpz_class>;
/// Free Z[Z/2]-complex; ranks count group-ring generators.
using EquivariantChainComplex = BasicChainComplex<GroupRingElement>;

/// True iff every composite ∂_{j-1} ∘ ∂_j vanishes.
template <class Entry>
bool verify_complex(const BasicChainComplex<Entry>& c) {
  for (int j = c.min_degree() + 1; j <= c.max_degree(); ++j) {
    if (!(c.boundary(j) * c.boundary(j + 1)).is_zero()) return false;
  }
  return true;
}

/// H_j, via Smith normal form. Throws std::domain_error if ∂_j ∘ ∂_{j+1} ≠ 0.
AbelianGroup homology(const ChainComplex& c, int j);

/// H^j(C; coeff) of the dual complex. Over Z the result is checked against
/// Hom(H_j, Z) ⊕ Ext(H_{j-1}, Z); a disagreement throws std::logic_error.
/// Over a field the group is free of rank equal to the dimension.
AbelianGroup cohomology(const ChainComplex& c, int j, const Coefficients& coeff = Coefficients::integers());

/// The based complex with its basepoint deleted: H(reduced(C)) = H̃(C).
/// Throws std::invalid_argument if `c` is unbased.
ChainComplex reduced(const ChainComplex& c);

GradedGroupTable homology_table(const ChainComplex& c);
GradedGroupTable cohomology_table(const ChainComplex& c, const Coefficients& coeff = Coefficients::integers());
/// Tables of H̃ for a based complex.
GradedGroupTable reduced_homology_table(const ChainComplex& c);
GradedGroupTable reduced_cohomology_table(const ChainComplex& c,
                                          const Coefficients& coeff = Coefficients::integers());

/// ∂(x ⊗ y) = ∂x ⊗ y + (-1)^|x| x ⊗ ∂y. Cell (p, a) ⊗ (q, b) is listed in
/// degree p+q ordered by p, then a, then b. Based iff both factors are.
ChainComplex tensor(const ChainComplex& c, const ChainComplex& d);

/// C ⊗_Z D with the diagonal τ-action, on the free basis a ⊗ τ^f b (f = 0, 1).
EquivariantChainComplex equivariant_tensor(const EquivariantChainComplex& c, const EquivariantChainComplex& d);

/// Applies the augmentation entrywise; the chains of the orbit space of a
/// free action. The output is unbased.
ChainComplex coinvariants(const EquivariantChainComplex& c);

using CellSelector = std::function<bool(int degree, std::size_t cell)>;

/// C / A for the subcomplex A of selected cells (plus the basepoint, if any).
/// Selected 0-cells merge into a basepoint listed first in degree 0; an empty
/// selection adjoins a disjoint basepoint. Throws std::invalid_argument if the
/// selection is not closed under the boundary or C does not start in degree 0.
ChainComplex quotient_by_subcomplex(const ChainComplex& c, const CellSelector& selected);

/// Reduced suspension: basepoint in degree 0, every other cell shifted up by one.
ChainComplex suspend(const ChainComplex& c);

/// One-point union; the common basepoint is 0-cell 0 of the result.
ChainComplex wedge(std::span<const ChainComplex> summands);

/// Σ_j (-1)^j rank C_j, reduced when the complex is based.
mpz_class reduced_euler_characteristic(const ChainComplex& c);

}  // namespace su2hom
