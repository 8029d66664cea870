#include "su2hom/space_models.hpp"

#include <string>

namespace su2hom::models {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

ChainComplex sphere(int m) {
  require(m >= 0, "sphere dimension must be nonnegative");
  if (m == 0) return ChainComplex(0, {2}, {}, 0);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(m) + 1, 0);
  ranks.front() = 1;
  ranks.back() = 1;
  std::vector<IntegerMatrix> boundaries;
  for (int j = 1; j <= m; ++j) boundaries.emplace_back(ranks[static_cast<std::size_t>(j - 1)], ranks[static_cast<std::size_t>(j)]);
  return ChainComplex(0, std::move(ranks), std::move(boundaries), 0);
}

ChainComplex circle() { return sphere(1); }

ChainComplex torus(int n) {
  require(n >= 1, "torus rank must be at least 1");
  ChainComplex t = circle();
  for (int i = 1; i < n; ++i) t = tensor(t, circle());
  return t;
}

EquivariantChainComplex equivariant_sphere(int m) {
  require(m >= 0, "sphere dimension must be nonnegative");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(m) + 1, 1);
  std::vector<GroupRingMatrix> boundaries;
  for (int j = 1; j <= m; ++j) {
    GroupRingMatrix d(1, 1);
    d(0, 0) = GroupRingElement(1, j % 2 == 0 ? 1 : -1);
    boundaries.push_back(std::move(d));
  }
  return EquivariantChainComplex(0, std::move(ranks), std::move(boundaries));
}

ChainComplex rp(int m) {
  require(m >= 0, "projective space dimension must be nonnegative");
  return coinvariants(equivariant_sphere(m)).with_basepoint(0);
}

ChainComplex stunted_rp(int m, int k) {
  require(1 <= k && k <= m, "stunted projective space RP^m/RP^(k-1) needs 1 <= k <= m");
  return quotient_by_subcomplex(rp(m), [k](int degree, std::size_t) { return degree < k; });
}

ChainComplex sphere_bundle_skl(int k) {
  require(k >= 1, "sphere bundle S(kL) needs k >= 1");
  return coinvariants(equivariant_tensor(equivariant_sphere(k - 1), equivariant_sphere(2))).with_basepoint(0);
}

ChainComplex thom_space_kl(int k, int m) {
  require(k >= 1 && m >= 1, "Thom space T(kL) over RP^m needs k, m >= 1");
  return stunted_rp(k + m, k);
}

ChainComplex splitting_wedge_model(int n) {
  require(1 <= n && n <= 12, "splitting wedge model supports 1 <= n <= 12");
  std::vector<ChainComplex> summands;
  for (int k = 1; k <= n; ++k) {
    const ChainComplex block = suspend(sphere_bundle_skl(k));
    mpz_class copies;
    mpz_bin_uiui(copies.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    summands.insert(summands.end(), copies.get_ui(), block);
  }
  return wedge(summands);
}

}  // namespace su2hom::models
