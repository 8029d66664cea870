#include "su2hom/closed_form.hpp"

#include <sstream>
#include <stdexcept>

#include "su2hom/chain_complex.hpp"
#include "su2hom/space_models.hpp"

namespace su2hom {
namespace {

AbelianGroup z() { return AbelianGroup::free(1); }
AbelianGroup z2() { return AbelianGroup::cyclic(2); }

std::string describe(const GradedGroupTable& t) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [j, g] : t.groups()) {
    os << (first ? "" : ", ") << j << ": " << g.to_string(t.coefficients().name());
    first = false;
  }
  os << "}";
  return os.str();
}

std::vector<mpz_class> multiply(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

void require_positive(int value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

}  // namespace

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

PoincarePolynomial::PoincarePolynomial(std::vector<mpz_class> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  for (const auto& c : coefficients_) {
    if (c < 0) throw std::invalid_argument("Poincaré coefficients must be nonnegative");
  }
}

mpz_class PoincarePolynomial::coefficient(int j) const {
  if (j < 0 || j > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(j)];
}

mpz_class PoincarePolynomial::evaluate(const mpz_class& t) const {
  mpz_class value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * t + *it;
  return value;
}

std::string PoincarePolynomial::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    const mpz_class& c = coefficients_[j];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (j == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str();
    out += "t";
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

std::string to_string(SplittingPiece piece) {
  switch (piece) {
    case SplittingPiece::sphere3:
      return "S^3";
    case SplittingPiece::sphere2_wedge_stunted:
      return "S^2 v RP^4/RP^2";
    case SplittingPiece::sigma_rp2_wedge_stunted:
      return "Sigma RP^2 v RP^(k+2)/RP^(k-1)";
  }
  return "?";
}

GradedGroupTable stunted_display(int k) {
  require_positive(k, "stunted display index k");
  const int sign = k % 2 == 0 ? 1 : -1;
  GradedGroupTable t(Coefficients::integers(), true);
  t.add(k + 1 - sign, z());
  t.add(k + (3 + sign) / 2, z2());
  return t;
}

GradedGroupTable stunted_cohomology_closed_form(int k) {
  if (k < 2) throw std::invalid_argument("stunted summand exists only for k >= 2");
  if (k == 2) {
    GradedGroupTable t(Coefficients::integers(), true);
    t.set(4, z2());
    return t;
  }
  return stunted_display(k);
}

GradedGroupTable sigma_skl_closed_form(int k) {
  require_positive(k, "block index k");
  GradedGroupTable t(Coefficients::integers(), true);
  if (k == 1) {
    t.set(3, z());
    return t;
  }
  t.set(k == 2 ? 2 : 3, k == 2 ? z() : z2());
  t += stunted_cohomology_closed_form(k);
  return t;
}

std::vector<SplittingSummand> splitting_summands(int n) {
  require_positive(n, "tuple length n");
  std::vector<SplittingSummand> out;
  for (int k = 1; k <= n; ++k) {
    const SplittingPiece piece = k == 1   ? SplittingPiece::sphere3
                                 : k == 2 ? SplittingPiece::sphere2_wedge_stunted
                                          : SplittingPiece::sigma_rp2_wedge_stunted;
    out.push_back({k, binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)), piece});
  }
  return out;
}

GradedGroupTable commuting_tuple_cohomology(int n, const Coefficients& coeff) {
  GradedGroupTable reduced(Coefficients::integers(), true);
  for (const auto& s : splitting_summands(n)) reduced += sigma_skl_closed_form(s.k).repeated(s.multiplicity);
  return change_coefficients(reduced.unreduced(), coeff);
}

PoincarePolynomial rational_poincare_by_monomials(int n) {
  require_positive(n, "tuple length n");
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 3);
  // τ acts on s^ε x_S by (-1)^(ε + |S|); monomials with equal (ε, |S|) share degree and sign.
  for (int eps = 0; eps <= 1; ++eps) {
    for (int size = 0; size <= n; ++size) {
      if ((eps + size) % 2 != 0) continue;
      c[static_cast<std::size_t>(2 * eps + size)] += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(size));
    }
  }
  return PoincarePolynomial(std::move(c));
}

PoincarePolynomial rational_poincare_by_generating_function(int n) {
  require_positive(n, "tuple length n");
  std::vector<mpz_class> plus{1};
  std::vector<mpz_class> minus{1};
  for (int i = 0; i < n; ++i) {
    plus = multiply(plus, {1, 1});
    minus = multiply(minus, {1, -1});
  }
  std::vector<mpz_class> c(plus.size() + 2);
  for (std::size_t j = 0; j < plus.size(); ++j) {
    const mpz_class even = plus[j] + minus[j];
    const mpz_class odd = plus[j] - minus[j];
    if (!mpz_divisible_ui_p(even.get_mpz_t(), 2) || !mpz_divisible_ui_p(odd.get_mpz_t(), 2)) {
      throw std::logic_error("generating function has a non-integral coefficient");
    }
    c[j] += even / 2;
    c[j + 2] += odd / 2;
  }
  return PoincarePolynomial(std::move(c));
}

PoincarePolynomial rational_poincare(int n) {
  PoincarePolynomial a = rational_poincare_by_monomials(n);
  const PoincarePolynomial b = rational_poincare_by_generating_function(n);
  if (!(a == b)) {
    throw std::logic_error("Poincaré routes disagree: " + a.to_string() + " vs " + b.to_string());
  }
  return a;
}

GradedGroupTable golden_y3_table() {
  GradedGroupTable t(Coefficients::integers(), false);
  t.set(0, z());
  t.set(2, AbelianGroup::free(3));
  t.set(3, AbelianGroup::free(3) + z2());
  t.set(4, z2().repeated(4));
  t.set(5, z());
  return t;
}

bool VerificationReport::all_passed() const { return passed_count() == items.size(); }

std::size_t VerificationReport::passed_count() const {
  std::size_t n = 0;
  for (const auto& item : items) n += item.passed ? 1 : 0;
  return n;
}

VerificationReport verify_all(int max_n, int max_k) {
  require_positive(max_n, "max_n");
  require_positive(max_k, "max_k");
  VerificationReport report{max_n, max_k, {}};

  auto record = [&](std::string check, auto&& body) {
    try {
      auto [passed, detail] = body();
      report.items.push_back({std::move(check), passed, std::move(detail)});
    } catch (const std::exception& e) {
      report.items.push_back({std::move(check), false, std::string("exception: ") + e.what()});
    }
  };

  for (int k = 1; k <= max_k; ++k) {
    record("block k=" + std::to_string(k), [k] {
      const GradedGroupTable expected = sigma_skl_closed_form(k);
      const GradedGroupTable chains = reduced_cohomology_table(suspend(models::sphere_bundle_skl(k)));
      return std::pair{expected == chains, "closed form " + describe(expected) + ", chains " + describe(chains)};
    });
  }

  for (int n = 1; n <= max_n; ++n) {
    const GradedGroupTable closed = commuting_tuple_cohomology(n);
    std::optional<ChainComplex> model;
    record("splitting n=" + std::to_string(n), [&] {
      model = models::splitting_wedge_model(n);
      const GradedGroupTable chains = reduced_cohomology_table(*model).unreduced();
      return std::pair{closed == chains, "closed form " + describe(closed) + ", chains " + describe(chains)};
    });
    record("mod2 n=" + std::to_string(n), [&] {
      if (!model) throw std::runtime_error("wedge model unavailable");
      const Coefficients f2 = Coefficients::prime_field(2);
      const GradedGroupTable via_uct = change_coefficients(closed, f2);
      const GradedGroupTable chains = reduced_cohomology_table(*model, f2).unreduced();
      return std::pair{via_uct == chains, "universal coefficients " + describe(via_uct) + ", chains " + describe(chains)};
    });
    record("rational n=" + std::to_string(n), [&] {
      const PoincarePolynomial p = rational_poincare(n);
      bool ok = true;
      const int top = std::max(p.degree(), closed.top_degree().value_or(0));
      for (int j = 0; j <= top; ++j) ok = ok && closed.at(j).free_rank() == p.coefficient(j);
      for (const auto& [j, g] : closed.groups()) {
        for (const auto& r : g.primary_decomposition()) {
          ok = ok && mpz_popcount(r.order.get_mpz_t()) == 1;
        }
      }
      return std::pair{ok, "P(t) = " + p.to_string() + ", integral " + describe(closed)};
    });
  }

  if (max_n >= 3) {
    record("golden Y[3]", [] {
      const GradedGroupTable expected = golden_y3_table();
      const GradedGroupTable closed = commuting_tuple_cohomology(3);
      const GradedGroupTable chains = reduced_cohomology_table(models::splitting_wedge_model(3)).unreduced();
      return std::pair{expected == closed && expected == chains,
                       "reference " + describe(expected) + ", closed form " + describe(closed)};
    });
  }
  return report;
}

}  // namespace su2hom
