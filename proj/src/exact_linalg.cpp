#include "su2hom/exact_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace su2hom {
namespace {

// Row/column reduction of `a` to Smith form. When `u` and `v` are given they
// are updated so that u · a · v stays equal to the original matrix.
class SmithReducer {
 public:
  SmithReducer(IntegerMatrix& a, IntegerMatrix* u, IntegerMatrix* v) : a_(a), u_(u), v_(v) {}

  void run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_step(t)) return;
    }
  }

 private:
  // Returns false once the trailing submatrix is zero.
  bool reduce_step(std::size_t t) {
    for (;;) {
      std::size_t pi = 0;
      std::size_t pj = 0;
      if (!find_min_pivot(t, pi, pj)) return false;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      mpz_class q;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        subtract_row_multiple(i, t, q);
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        subtract_col_multiple(j, t, q);
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      if (std::size_t bad = offending_row(t); bad != 0) {
        add_row(t, bad);
        continue;
      }
      if (a_(t, t) < 0) negate_row(t);
      return true;
    }
  }

  bool find_min_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    const mpz_class* best = nullptr;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const mpz_class& x = a_(i, j);
        if (x == 0) continue;
        if (best == nullptr || cmpabs(x, *best) < 0) {
          best = &x;
          pi = i;
          pj = j;
          if (*best == 1 || *best == -1) return true;
        }
      }
    }
    return best != nullptr;
  }

  // A row below t holding an entry not divisible by the pivot, or 0.
  std::size_t offending_row(std::size_t t) const {
    const mpz_class& p = a_(t, t);
    if (p == 1 || p == -1) return 0;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(i, j) != 0 && mpz_divisible_p(a_(i, j).get_mpz_t(), p.get_mpz_t()) == 0) return i;
      }
    }
    return 0;
  }

  static int cmpabs(const mpz_class& x, const mpz_class& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()); }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(i, j), a_(k, j));
    if (u_ != nullptr) {
      for (std::size_t r = 0; r < u_->rows(); ++r) std::swap((*u_)(r, i), (*u_)(r, k));
    }
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, j), a_(i, k));
    if (v_ != nullptr) {
      for (std::size_t c = 0; c < v_->cols(); ++c) std::swap((*v_)(j, c), (*v_)(k, c));
    }
  }

  // row_target -= q · row_source
  void subtract_row_multiple(std::size_t target, std::size_t source, const mpz_class& q) {
    for (std::size_t j = 0; j < a_.cols(); ++j) {
      if (a_(source, j) != 0) a_(target, j) -= q * a_(source, j);
    }
    if (u_ != nullptr) {
      for (std::size_t r = 0; r < u_->rows(); ++r) {
        if ((*u_)(r, target) != 0) (*u_)(r, source) += q * (*u_)(r, target);
      }
    }
  }

  // col_target -= q · col_source
  void subtract_col_multiple(std::size_t target, std::size_t source, const mpz_class& q) {
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      if (a_(i, source) != 0) a_(i, target) -= q * a_(i, source);
    }
    if (v_ != nullptr) {
      for (std::size_t c = 0; c < v_->cols(); ++c) {
        if ((*v_)(target, c) != 0) (*v_)(source, c) += q * (*v_)(target, c);
      }
    }
  }

  // row_target += row_source
  void add_row(std::size_t target, std::size_t source) {
    for (std::size_t j = 0; j < a_.cols(); ++j) {
      if (a_(source, j) != 0) a_(target, j) += a_(source, j);
    }
    if (u_ != nullptr) {
      for (std::size_t r = 0; r < u_->rows(); ++r) {
        if ((*u_)(r, target) != 0) (*u_)(r, source) -= (*u_)(r, target);
      }
    }
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
    if (u_ != nullptr) {
      for (std::size_t r = 0; r < u_->rows(); ++r) (*u_)(r, i) = -(*u_)(r, i);
    }
  }

  IntegerMatrix& a_;
  IntegerMatrix* u_;
  IntegerMatrix* v_;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

struct Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

// Connected components of the bipartite row/column graph of nonzero entries.
// Zero rows and columns belong to no block.
std::vector<Block> nonzero_blocks(const IntegerMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  DisjointSets sets(r + c);
  std::vector<bool> row_used(r, false);
  std::vector<bool> col_used(c, false);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (a(i, j) == 0) continue;
      sets.unite(i, r + j);
      row_used[i] = true;
      col_used[j] = true;
    }
  }
  std::vector<std::size_t> block_of(r + c, SIZE_MAX);
  std::vector<Block> blocks;
  auto block_for = [&](std::size_t node) -> Block& {
    const std::size_t root = sets.find(node);
    if (block_of[root] == SIZE_MAX) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    return blocks[block_of[root]];
  };
  for (std::size_t i = 0; i < r; ++i) {
    if (row_used[i]) block_for(i).rows.push_back(i);
  }
  for (std::size_t j = 0; j < c; ++j) {
    if (col_used[j]) block_for(r + j).cols.push_back(j);
  }
  return blocks;
}

IntegerMatrix extract(const IntegerMatrix& a, const Block& b) {
  IntegerMatrix m(b.rows.size(), b.cols.size());
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    for (std::size_t j = 0; j < b.cols.size(); ++j) m(i, j) = a(b.rows[i], b.cols[j]);
  }
  return m;
}

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (e > 0) {
    if ((e & 1u) != 0) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1u;
  }
  return result;
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const std::uint64_t inv = pow_mod(m[rank][c], p - 2, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t factor = mul_mod(m[i][c], inv, p);
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = mul_mod(factor, m[rank][j], p);
        m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + (p - sub);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<mpz_class> SmithDecomposition::nonzero_diagonal() const {
  std::vector<mpz_class> out;
  const std::size_t n = std::min(S.rows(), S.cols());
  for (std::size_t i = 0; i < n && S(i, i) != 0; ++i) out.push_back(S(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  SmithDecomposition d{IntegerMatrix::identity(a.rows(), 1), a, IntegerMatrix::identity(a.cols(), 1)};
  SmithReducer(d.S, &d.U, &d.V).run();
  return d;
}

SmithInvariants smith_invariants(const IntegerMatrix& a) {
  SmithInvariants out;
  std::vector<mpz_class> orders;
  for (const Block& b : nonzero_blocks(a)) {
    IntegerMatrix m = extract(a, b);
    SmithReducer(m, nullptr, nullptr).run();
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < n && m(i, i) != 0; ++i) {
      ++out.rank;
      if (m(i, i) != 1) orders.push_back(m(i, i));
    }
  }
  out.torsion = AbelianGroup::from_cyclic_orders(0, orders);
  return out;
}

AbelianGroup cokernel_structure(const IntegerMatrix& a) {
  SmithInvariants inv = smith_invariants(a);
  return AbelianGroup::free(a.rows() - inv.rank) + inv.torsion;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  mpz_class n;
  mpz_import(n.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::size_t rank_over_field(const IntegerMatrix& a, std::uint64_t p) {
  if (p == 0) return smith_invariants(a).rank;
  if (!is_prime(p)) throw std::invalid_argument("rank_over_field: characteristic must be 0 or a prime");
  std::size_t rank = 0;
  for (const Block& b : nonzero_blocks(a)) {
    std::vector<std::vector<std::uint64_t>> m(b.rows.size(), std::vector<std::uint64_t>(b.cols.size()));
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
      for (std::size_t j = 0; j < b.cols.size(); ++j) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), a(b.rows[i], b.cols[j]).get_mpz_t(), p);
        m[i][j] = r.get_ui();
      }
    }
    rank += rank_mod_p(std::move(m), p);
  }
  return rank;
}

}  // namespace su2hom
