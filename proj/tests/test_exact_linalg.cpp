#include <random>

#include "doctest.h"
#include "su2hom/exact_linalg.hpp"
#include "test_support.hpp"

using namespace su2hom;
using su2hom::testing::bareiss_determinant;
using su2hom::testing::leibniz_determinant;
using su2hom::testing::random_matrix;

namespace {

bool is_smith_diagonal(const IntegerMatrix& s) {
  const std::size_t n = std::min(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (i != j && s(i, j) != 0) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (s(i, i) < 0) return false;
    if (i + 1 < n) {
      const mpz_class& a = s(i, i);
      const mpz_class& b = s(i + 1, i + 1);
      if (a == 0 && b != 0) return false;
      if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) == 0) return false;
    }
  }
  return true;
}

void check_decomposition(const IntegerMatrix& a) {
  const SmithDecomposition d = smith_normal_form(a);
  REQUIRE(d.U.rows() == a.rows());
  REQUIRE(d.V.rows() == a.cols());
  CHECK(d.U * d.S * d.V == a);
  CHECK(abs(bareiss_determinant(d.U)) == 1);
  CHECK(abs(bareiss_determinant(d.V)) == 1);
  CHECK(is_smith_diagonal(d.S));
}

IntegerMatrix permuted(const IntegerMatrix& a, std::mt19937_64& rng) {
  std::vector<std::size_t> rows(a.rows());
  std::vector<std::size_t> cols(a.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(cols.begin(), cols.end(), rng);
  IntegerMatrix p(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = a(rows[i], cols[j]);
  }
  return p;
}

// Product of random elementary matrices.
IntegerMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  IntegerMatrix u = IntegerMatrix::identity(n, 1);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    const std::size_t i = idx(rng);
    const std::size_t j = idx(rng);
    if (i == j) continue;
    IntegerMatrix e = IntegerMatrix::identity(n, 1);
    e(i, j) = coef(rng);
    u = u * e;
  }
  return u;
}

}  // namespace

TEST_CASE("smith_normal_form on small fixed matrices") {
  {
    const SmithDecomposition d = smith_normal_form(IntegerMatrix::from_rows({{0}}));
    CHECK(d.S == IntegerMatrix::from_rows({{0}}));
    CHECK(d.U == IntegerMatrix::from_rows({{1}}));
    CHECK(d.V == IntegerMatrix::from_rows({{1}}));
  }
  CHECK(smith_normal_form(IntegerMatrix::from_rows({{2, 0}, {0, 3}})).nonzero_diagonal() ==
        std::vector<mpz_class>{1, 6});
  CHECK(smith_normal_form(IntegerMatrix::from_rows({{2}})).S == IntegerMatrix::from_rows({{2}}));
  CHECK(smith_normal_form(IntegerMatrix::from_rows({{-5}})).S == IntegerMatrix::from_rows({{5}}));
  check_decomposition(IntegerMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(smith_normal_form(IntegerMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).nonzero_diagonal() ==
        std::vector<mpz_class>{2, 6, 12});
}

TEST_CASE("smith_normal_form on empty matrices") {
  for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 0}, {2, 0}, {0, 3}}) {
    const IntegerMatrix a(r, c);
    const SmithDecomposition d = smith_normal_form(a);
    CHECK(d.U == IntegerMatrix::identity(r, 1));
    CHECK(d.V == IntegerMatrix::identity(c, 1));
    CHECK(d.S.rows() == r);
    CHECK(d.S.cols() == c);
    CHECK(rank_over_field(a, 0) == 0);
    CHECK(rank_over_field(a, 2) == 0);
  }
}

TEST_CASE("diagonal product equals |det| (Leibniz oracle)") {
  // Frozen case; expected diagonal computed with an independent SNF implementation.
  const IntegerMatrix frozen = IntegerMatrix::from_rows({{0, -6, 2, 10, -9, -8},
                                                          {7, -7, 1, 8, -9, 6},
                                                          {-4, -9, -8, 3, 3, -8},
                                                          {-3, -8, 7, 3, -9, 8},
                                                          {-7, -3, 10, 10, 8, -9},
                                                          {8, 8, 2, -9, -3, -9}});
  CHECK(leibniz_determinant(frozen) == -4571850);
  CHECK(smith_normal_form(frozen).nonzero_diagonal() == std::vector<mpz_class>{1, 1, 1, 1, 1, 4571850});

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const IntegerMatrix a = random_matrix(rng, 6, 6);
    const mpz_class det = leibniz_determinant(a);
    const auto diag = smith_normal_form(a).nonzero_diagonal();
    if (det == 0) {
      CHECK(diag.size() < 6);
      continue;
    }
    mpz_class product = 1;
    for (const auto& d : diag) product *= d;
    CHECK(product == abs(det));
  }
}

TEST_CASE("arbitrary precision entries") {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 70);
  const IntegerMatrix a = IntegerMatrix::from_rows({{big, 0}, {0, 3 * big}});
  CHECK(smith_normal_form(a).nonzero_diagonal() == std::vector<mpz_class>{big, 3 * big});
  check_decomposition(a);

  // Coefficient growth past 64 bits in intermediate steps.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    check_decomposition(random_matrix(rng, 8, 8, -1'000'000'000, 1'000'000'000));
  }
}

TEST_CASE("cokernel_structure") {
  CHECK(cokernel_structure(IntegerMatrix(2, 0)) == AbelianGroup::free(2));
  CHECK(cokernel_structure(IntegerMatrix::from_rows({{2}})) == AbelianGroup::cyclic(2));
  CHECK(cokernel_structure(IntegerMatrix::from_rows({{2, 0}, {0, 0}})) ==
        AbelianGroup::free(1) + AbelianGroup::cyclic(2));
  CHECK(cokernel_structure(IntegerMatrix(0, 3)).is_trivial());
}

TEST_CASE("rank_over_field") {
  const IntegerMatrix two = IntegerMatrix::from_rows({{2}});
  CHECK(rank_over_field(two, 2) == 0);
  CHECK(rank_over_field(two, 0) == 1);
  CHECK(rank_over_field(two, 3) == 1);
  CHECK_THROWS_AS(rank_over_field(two, 4), std::invalid_argument);
  CHECK_THROWS_AS(rank_over_field(two, 1), std::invalid_argument);
  CHECK(rank_over_field(IntegerMatrix::from_rows({{-1, 7}}), 18446744073709551557ull) == 1);
}

TEST_CASE("property: Smith invariants on random matrices up to 12x12") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> dim(0, 12);
  std::uniform_int_distribution<int> sparsity(0, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    IntegerMatrix a = random_matrix(rng, dim(rng), dim(rng));
    if (sparsity(rng) == 0) {
      // Mostly zero, so the block splitter sees several components.
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          if ((i * 7 + j * 3 + static_cast<std::size_t>(trial)) % 5 != 0) a(i, j) = 0;
        }
      }
    }
    check_decomposition(a);

    const SmithDecomposition d = smith_normal_form(a);
    const auto diag = d.nonzero_diagonal();
    const SmithInvariants inv = smith_invariants(a);
    std::vector<mpz_class> nontrivial;
    for (const auto& x : diag) {
      if (x != 1) nontrivial.push_back(x);
    }
    CHECK(inv.rank == diag.size());
    CHECK(inv.torsion == AbelianGroup::from_cyclic_orders(0, nontrivial));
    CHECK(rank_over_field(a, 0) == diag.size());

    // Over F_p the rank counts diagonal entries prime to p.
    for (std::uint64_t p : {2u, 3u, 5u}) {
      std::size_t expected = 0;
      for (const auto& x : diag) expected += mpz_divisible_ui_p(x.get_mpz_t(), p) == 0 ? 1 : 0;
      CHECK(rank_over_field(a, p) == expected);
    }
  }
}

TEST_CASE("property: cokernel invariant under permutations and unimodular changes") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng);
    const std::size_t c = dim(rng);
    IntegerMatrix a = random_matrix(rng, r, c, -4, 4);
    const AbelianGroup g = cokernel_structure(a);
    CHECK(cokernel_structure(permuted(a, rng)) == g);
    CHECK(cokernel_structure(random_unimodular(r, rng) * a * random_unimodular(c, rng)) == g);
  }
}

TEST_CASE("deterministic output") {
  std::mt19937_64 rng(3);
  const IntegerMatrix a = random_matrix(rng, 7, 5);
  const SmithDecomposition x = smith_normal_form(a);
  const SmithDecomposition y = smith_normal_form(a);
  CHECK(x.U == y.U);
  CHECK(x.S == y.S);
  CHECK(x.V == y.V);
}
