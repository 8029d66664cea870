#include "su2hom/chain_complex.hpp"

#include <algorithm>
#include <map>

namespace su2hom {
namespace {

// Smith invariants of ∂_j and of its transpose, computed once per degree.
class BoundaryInvariants {
 public:
  explicit BoundaryInvariants(const ChainComplex& c) : c_(c) {}

  const SmithInvariants& of(int j) {
    auto it = direct_.find(j);
    if (it == direct_.end()) it = direct_.emplace(j, smith_invariants(c_.boundary(j))).first;
    return it->second;
  }
  const SmithInvariants& of_transpose(int j) {
    auto it = transposed_.find(j);
    if (it == transposed_.end()) it = transposed_.emplace(j, smith_invariants(c_.boundary(j).transpose())).first;
    return it->second;
  }
  std::size_t field_rank(int j, std::uint64_t p) {
    auto key = std::make_pair(j, p);
    auto it = field_ranks_.find(key);
    if (it == field_ranks_.end()) it = field_ranks_.emplace(key, rank_over_field(c_.boundary(j).transpose(), p)).first;
    return it->second;
  }
  void require_cycle_condition(int j) {
    if (checked_.count(j) != 0) return;
    if (!(c_.boundary(j) * c_.boundary(j + 1)).is_zero()) {
      throw std::domain_error("boundary composite d_" + std::to_string(j) + " d_" + std::to_string(j + 1) +
                              " is nonzero");
    }
    checked_.insert({j, true});
  }

 private:
  const ChainComplex& c_;
  std::map<int, SmithInvariants> direct_;
  std::map<int, SmithInvariants> transposed_;
  std::map<std::pair<int, std::uint64_t>, std::size_t> field_ranks_;
  std::map<int, bool> checked_;
};

AbelianGroup homology_at(const ChainComplex& c, int j, BoundaryInvariants& inv) {
  inv.require_cycle_condition(j);
  const SmithInvariants& out = inv.of(j);
  const SmithInvariants& in = inv.of(j + 1);
  return AbelianGroup::free(c.rank(j) - out.rank - in.rank) + in.torsion;
}

AbelianGroup cohomology_at(const ChainComplex& c, int j, const Coefficients& coeff, BoundaryInvariants& inv) {
  inv.require_cycle_condition(j);
  if (coeff.is_field()) {
    const std::uint64_t p = coeff.characteristic();
    return AbelianGroup::free(c.rank(j) - inv.field_rank(j + 1, p) - inv.field_rank(j, p));
  }
  // Cochains: δ^j = ∂_{j+1}^T, δ^{j-1} = ∂_j^T.
  const SmithInvariants& out = inv.of_transpose(j + 1);
  const SmithInvariants& in = inv.of_transpose(j);
  AbelianGroup dual = AbelianGroup::free(c.rank(j) - out.rank - in.rank) + in.torsion;

  AbelianGroup universal = AbelianGroup::free(homology_at(c, j, inv).free_rank()) +
                           homology_at(c, j - 1, inv).torsion_subgroup();
  if (!(dual == universal)) {
    throw std::logic_error("cohomology in degree " + std::to_string(j) + " disagrees with universal coefficients: " +
                           dual.to_string() + " vs " + universal.to_string());
  }
  return dual;
}

void require_based(const ChainComplex& c, const char* what) {
  if (!c.is_based()) throw std::invalid_argument(std::string(what) + " requires a based complex");
  if (c.min_degree() != 0) throw std::invalid_argument(std::string(what) + " requires a complex starting in degree 0");
}

IntegerMatrix submatrix(const IntegerMatrix& a, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
  IntegerMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = a(rows[i], cols[j]);
  }
  return m;
}

ChainComplex point_complex() { return ChainComplex(0, {1}, {}, 0); }

}  // namespace

AbelianGroup homology(const ChainComplex& c, int j) {
  BoundaryInvariants inv(c);
  return homology_at(c, j, inv);
}

AbelianGroup cohomology(const ChainComplex& c, int j, const Coefficients& coeff) {
  BoundaryInvariants inv(c);
  return cohomology_at(c, j, coeff, inv);
}

ChainComplex reduced(const ChainComplex& c) {
  require_based(c, "reduced");
  const std::size_t base = *c.basepoint();
  std::vector<std::size_t> ranks;
  std::vector<IntegerMatrix> boundaries;
  for (int j = 0; j <= c.max_degree(); ++j) ranks.push_back(c.rank(j) - (j == 0 ? 1 : 0));
  for (int j = 1; j <= c.max_degree(); ++j) {
    const IntegerMatrix& d = c.boundary(j);
    if (j == 1) {
      std::vector<std::size_t> rows;
      std::vector<std::size_t> cols(d.cols());
      for (std::size_t r = 0; r < d.rows(); ++r) {
        if (r != base) rows.push_back(r);
      }
      for (std::size_t k = 0; k < cols.size(); ++k) cols[k] = k;
      boundaries.push_back(submatrix(d, rows, cols));
    } else {
      boundaries.push_back(d);
    }
  }
  return ChainComplex(0, std::move(ranks), std::move(boundaries));
}

GradedGroupTable homology_table(const ChainComplex& c) {
  GradedGroupTable table(Coefficients::integers(), false);
  BoundaryInvariants inv(c);
  for (int j = c.min_degree(); j <= c.max_degree(); ++j) table.set(j, homology_at(c, j, inv));
  return table;
}

GradedGroupTable cohomology_table(const ChainComplex& c, const Coefficients& coeff) {
  GradedGroupTable table(coeff, false);
  BoundaryInvariants inv(c);
  for (int j = c.min_degree(); j <= c.max_degree(); ++j) table.set(j, cohomology_at(c, j, coeff, inv));
  return table;
}

GradedGroupTable reduced_homology_table(const ChainComplex& c) {
  const GradedGroupTable t = homology_table(reduced(c));
  GradedGroupTable out(t.coefficients(), true);
  for (const auto& [j, g] : t.groups()) out.set(j, g);
  return out;
}

GradedGroupTable reduced_cohomology_table(const ChainComplex& c, const Coefficients& coeff) {
  const GradedGroupTable t = cohomology_table(reduced(c), coeff);
  GradedGroupTable out(t.coefficients(), true);
  for (const auto& [j, g] : t.groups()) out.set(j, g);
  return out;
}

ChainComplex tensor(const ChainComplex& c, const ChainComplex& d) {
  const int lo = c.min_degree() + d.min_degree();
  const int hi = c.max_degree() + d.max_degree();
  if (c.max_degree() < c.min_degree() || d.max_degree() < d.min_degree()) return ChainComplex(lo, {}, {});

  // offset[n][p]: first index of the (p, n-p) block inside degree n.
  std::map<std::pair<int, int>, std::size_t> offset;
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) {
    std::size_t total = 0;
    for (int p = c.min_degree(); p <= c.max_degree(); ++p) {
      offset[{n, p}] = total;
      total += c.rank(p) * d.rank(n - p);
    }
    ranks.push_back(total);
  }
  auto index = [&](int n, int p, std::size_t a, std::size_t b) {
    return offset.at({n, p}) + a * d.rank(n - p) + b;
  };

  std::vector<IntegerMatrix> boundaries;
  for (int n = lo + 1; n <= hi; ++n) {
    IntegerMatrix m(ranks[static_cast<std::size_t>(n - 1 - lo)], ranks[static_cast<std::size_t>(n - lo)]);
    for (int p = c.min_degree(); p <= c.max_degree(); ++p) {
      const int q = n - p;
      const IntegerMatrix& dc = c.boundary(p);
      const IntegerMatrix& dd = d.boundary(q);
      const int sign = (p % 2 == 0) ? 1 : -1;
      for (std::size_t a = 0; a < c.rank(p); ++a) {
        for (std::size_t b = 0; b < d.rank(q); ++b) {
          const std::size_t col = index(n, p, a, b);
          if (p - 1 >= c.min_degree()) {
            for (std::size_t a2 = 0; a2 < dc.rows(); ++a2) {
              if (dc(a2, a) != 0) m(index(n - 1, p - 1, a2, b), col) += dc(a2, a);
            }
          }
          if (q - 1 >= d.min_degree()) {
            for (std::size_t b2 = 0; b2 < dd.rows(); ++b2) {
              if (dd(b2, b) != 0) m(index(n - 1, p, a, b2), col) += sign * dd(b2, b);
            }
          }
        }
      }
    }
    boundaries.push_back(std::move(m));
  }

  std::optional<std::size_t> base;
  if (c.is_based() && d.is_based() && lo == 0) base = index(0, 0, *c.basepoint(), *d.basepoint());
  return ChainComplex(lo, std::move(ranks), std::move(boundaries), base);
}

EquivariantChainComplex equivariant_tensor(const EquivariantChainComplex& c, const EquivariantChainComplex& d) {
  const int lo = c.min_degree() + d.min_degree();
  const int hi = c.max_degree() + d.max_degree();
  if (c.max_degree() < c.min_degree() || d.max_degree() < d.min_degree()) {
    return EquivariantChainComplex(lo, {}, {});
  }

  std::map<std::pair<int, int>, std::size_t> offset;
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) {
    std::size_t total = 0;
    for (int p = c.min_degree(); p <= c.max_degree(); ++p) {
      offset[{n, p}] = total;
      total += 2 * c.rank(p) * d.rank(n - p);
    }
    ranks.push_back(total);
  }
  // Generator a ⊗ τ^f b; τ · (a ⊗ τ^f b) = τa ⊗ τ^{f+1} b.
  auto index = [&](int n, int p, std::size_t a, std::size_t b, int f) {
    return offset.at({n, p}) + 2 * (a * d.rank(n - p) + b) + static_cast<std::size_t>(f);
  };

  const GroupRingElement tau = GroupRingElement::generator();
  std::vector<GroupRingMatrix> boundaries;
  for (int n = lo + 1; n <= hi; ++n) {
    GroupRingMatrix m(ranks[static_cast<std::size_t>(n - 1 - lo)], ranks[static_cast<std::size_t>(n - lo)]);
    for (int p = c.min_degree(); p <= c.max_degree(); ++p) {
      const int q = n - p;
      const GroupRingMatrix& dc = c.boundary(p);
      const GroupRingMatrix& dd = d.boundary(q);
      const int sign = (p % 2 == 0) ? 1 : -1;
      for (std::size_t a = 0; a < c.rank(p); ++a) {
        for (std::size_t b = 0; b < d.rank(q); ++b) {
          for (int f = 0; f < 2; ++f) {
            const std::size_t col = index(n, p, a, b, f);
            if (p - 1 >= c.min_degree()) {
              // (α + βτ)a' ⊗ τ^f b = α (a' ⊗ τ^f b) + βτ (a' ⊗ τ^{f+1} b)
              for (std::size_t a2 = 0; a2 < dc.rows(); ++a2) {
                const GroupRingElement& e = dc(a2, a);
                if (e.identity != 0) m(index(n - 1, p - 1, a2, b, f), col) += GroupRingElement(e.identity);
                if (e.tau != 0) m(index(n - 1, p - 1, a2, b, 1 - f), col) += GroupRingElement(e.tau) * tau;
              }
            }
            if (q - 1 >= d.min_degree()) {
              // a ⊗ τ^f (γ + δτ) b' = γ (a ⊗ τ^f b') + δ (a ⊗ τ^{f+1} b')
              for (std::size_t b2 = 0; b2 < dd.rows(); ++b2) {
                const GroupRingElement& e = dd(b2, b);
                if (e.identity != 0) m(index(n - 1, p, a, b2, f), col) += GroupRingElement(sign * e.identity);
                if (e.tau != 0) m(index(n - 1, p, a, b2, 1 - f), col) += GroupRingElement(sign * e.tau);
              }
            }
          }
        }
      }
    }
    boundaries.push_back(std::move(m));
  }
  return EquivariantChainComplex(lo, std::move(ranks), std::move(boundaries));
}

ChainComplex coinvariants(const EquivariantChainComplex& c) {
  std::vector<std::size_t> ranks;
  std::vector<IntegerMatrix> boundaries;
  for (int j = c.min_degree(); j <= c.max_degree(); ++j) ranks.push_back(c.rank(j));
  for (int j = c.min_degree() + 1; j <= c.max_degree(); ++j) {
    const GroupRingMatrix& d = c.boundary(j);
    IntegerMatrix m(d.rows(), d.cols());
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (std::size_t k = 0; k < d.cols(); ++k) m(r, k) = d(r, k).augmentation();
    }
    boundaries.push_back(std::move(m));
  }
  return ChainComplex(c.min_degree(), std::move(ranks), std::move(boundaries));
}

ChainComplex quotient_by_subcomplex(const ChainComplex& c, const CellSelector& selected) {
  if (c.max_degree() < c.min_degree()) return point_complex();
  if (c.min_degree() != 0) throw std::invalid_argument("quotient_by_subcomplex requires a complex starting in degree 0");
  const int top = c.max_degree();

  std::vector<std::vector<bool>> chosen(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) {
    auto& row = chosen[static_cast<std::size_t>(j)];
    row.resize(c.rank(j));
    for (std::size_t k = 0; k < c.rank(j); ++k) row[k] = selected(j, k);
  }
  if (c.is_based()) chosen[0][*c.basepoint()] = true;

  for (int j = 1; j <= top; ++j) {
    const IntegerMatrix& d = c.boundary(j);
    for (std::size_t k = 0; k < d.cols(); ++k) {
      if (!chosen[static_cast<std::size_t>(j)][k]) continue;
      for (std::size_t r = 0; r < d.rows(); ++r) {
        if (d(r, k) != 0 && !chosen[static_cast<std::size_t>(j - 1)][r]) {
          throw std::invalid_argument("selected cells are not closed under the boundary (degree " +
                                      std::to_string(j) + ", cell " + std::to_string(k) + ")");
        }
      }
    }
  }

  std::vector<std::vector<std::size_t>> kept(static_cast<std::size_t>(top) + 1);
  std::vector<std::size_t> collapsed0;
  for (int j = 0; j <= top; ++j) {
    for (std::size_t k = 0; k < c.rank(j); ++k) {
      if (!chosen[static_cast<std::size_t>(j)][k]) {
        kept[static_cast<std::size_t>(j)].push_back(k);
      } else if (j == 0) {
        collapsed0.push_back(k);
      }
    }
  }

  std::vector<std::size_t> ranks;
  ranks.push_back(kept[0].size() + 1);
  for (int j = 1; j <= top; ++j) ranks.push_back(kept[static_cast<std::size_t>(j)].size());

  std::vector<IntegerMatrix> boundaries;
  for (int j = 1; j <= top; ++j) {
    const IntegerMatrix& d = c.boundary(j);
    const auto& cols = kept[static_cast<std::size_t>(j)];
    if (j == 1) {
      IntegerMatrix m(ranks[0], cols.size());
      for (std::size_t k = 0; k < cols.size(); ++k) {
        for (std::size_t r : collapsed0) m(0, k) += d(r, cols[k]);
        for (std::size_t i = 0; i < kept[0].size(); ++i) m(i + 1, k) = d(kept[0][i], cols[k]);
      }
      boundaries.push_back(std::move(m));
    } else {
      boundaries.push_back(submatrix(d, kept[static_cast<std::size_t>(j - 1)], cols));
    }
  }
  return ChainComplex(0, std::move(ranks), std::move(boundaries), 0);
}

ChainComplex suspend(const ChainComplex& c) {
  require_based(c, "suspend");
  const ChainComplex r = reduced(c);
  std::vector<std::size_t> ranks{1};
  std::vector<IntegerMatrix> boundaries;
  for (int j = 0; j <= r.max_degree(); ++j) ranks.push_back(r.rank(j));
  if (r.max_degree() >= 0) boundaries.emplace_back(1, r.rank(0));
  for (int j = 1; j <= r.max_degree(); ++j) boundaries.push_back(r.boundary(j));
  return ChainComplex(0, std::move(ranks), std::move(boundaries), 0);
}

ChainComplex wedge(std::span<const ChainComplex> summands) {
  int top = 0;
  for (const auto& s : summands) {
    require_based(s, "wedge");
    top = std::max(top, s.max_degree());
  }
  if (summands.empty()) return point_complex();

  // offsets[j][s]: first index of summand s in degree j (degree 0 after the basepoint).
  std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(top) + 1);
  std::vector<std::size_t> ranks;
  for (int j = 0; j <= top; ++j) {
    std::size_t total = j == 0 ? 1 : 0;
    for (const auto& s : summands) {
      offsets[static_cast<std::size_t>(j)].push_back(total);
      total += s.rank(j) - (j == 0 ? 1 : 0);
    }
    ranks.push_back(total);
  }

  std::vector<IntegerMatrix> boundaries;
  for (int j = 1; j <= top; ++j) {
    IntegerMatrix m(ranks[static_cast<std::size_t>(j - 1)], ranks[static_cast<std::size_t>(j)]);
    for (std::size_t s = 0; s < summands.size(); ++s) {
      const ChainComplex& x = summands[s];
      const IntegerMatrix& d = x.boundary(j);
      const std::size_t col0 = offsets[static_cast<std::size_t>(j)][s];
      const std::size_t row0 = offsets[static_cast<std::size_t>(j - 1)][s];
      for (std::size_t r = 0; r < d.rows(); ++r) {
        std::size_t row = row0 + r;
        if (j == 1) {
          const std::size_t base = *x.basepoint();
          if (r == base) {
            row = 0;
          } else {
            row = row0 + r - (r > base ? 1 : 0);
          }
        }
        for (std::size_t k = 0; k < d.cols(); ++k) {
          if (d(r, k) != 0) m(row, col0 + k) += d(r, k);
        }
      }
    }
    boundaries.push_back(std::move(m));
  }
  return ChainComplex(0, std::move(ranks), std::move(boundaries), 0);
}

mpz_class reduced_euler_characteristic(const ChainComplex& c) {
  mpz_class chi = 0;
  for (int j = c.min_degree(); j <= c.max_degree(); ++j) {
    const mpz_class r(std::to_string(c.rank(j)));
    if (j % 2 == 0) {
      chi += r;
    } else {
      chi -= r;
    }
  }
  if (c.is_based()) chi -= 1;
  return chi;
}

}  // namespace su2hom
