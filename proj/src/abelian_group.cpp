#include "su2hom/abelian_group.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace su2hom {
namespace {

// Replaces `values` by a set of pairwise coprime integers > 1 such that every
// original value is a product of powers of them.
std::vector<mpz_class> gcd_free_basis(std::vector<mpz_class> values) {
  bool refined = true;
  while (refined) {
    refined = false;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t i = 0; i < values.size() && !refined; ++i) {
      for (std::size_t j = i + 1; j < values.size() && !refined; ++j) {
        mpz_class g = gcd(values[i], values[j]);
        if (g == 1) continue;
        mpz_class a = values[i] / g;
        mpz_class b = values[j] / g;
        values.erase(values.begin() + static_cast<std::ptrdiff_t>(j));
        values.erase(values.begin() + static_cast<std::ptrdiff_t>(i));
        values.push_back(g);
        if (a > 1) values.push_back(a);
        if (b > 1) values.push_back(b);
        refined = true;
      }
    }
  }
  return values;
}

unsigned long exponent_of(mpz_class n, const mpz_class& base) {
  unsigned long e = 0;
  while (mpz_divisible_p(n.get_mpz_t(), base.get_mpz_t()) != 0) {
    n /= base;
    ++e;
  }
  return e;
}

std::string power_term(const std::string& name, const mpz_class& multiplicity) {
  if (multiplicity <= 4) {
    std::string out;
    for (mpz_class i = 0; i < multiplicity; ++i) {
      if (!out.empty()) out += " ⊕ ";
      out += name;
    }
    return out;
  }
  const bool wrap = name.find('/') != std::string::npos;
  return (wrap ? "(" + name + ")" : name) + "^" + multiplicity.get_str();
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " ⊕ ";
    out += t;
  }
  return out;
}

}  // namespace

AbelianGroup AbelianGroup::free(mpz_class rank) {
  if (rank < 0) throw std::invalid_argument("free rank must be nonnegative");
  AbelianGroup g;
  g.free_rank_ = std::move(rank);
  return g;
}

AbelianGroup AbelianGroup::cyclic(const mpz_class& order) {
  const mpz_class orders[] = {order};
  return from_cyclic_orders(0, orders);
}

AbelianGroup AbelianGroup::from_cyclic_orders(mpz_class rank,
                                              std::span<const mpz_class> orders) {
  std::vector<TorsionRun> runs;
  runs.reserve(orders.size());
  for (const auto& d : orders) runs.push_back({d, 1});
  return from_runs(std::move(rank), std::move(runs));
}

AbelianGroup AbelianGroup::from_runs(mpz_class rank, std::vector<TorsionRun> runs) {
  if (rank < 0) throw std::invalid_argument("free rank must be nonnegative");
  AbelianGroup g;
  g.free_rank_ = std::move(rank);

  std::vector<TorsionRun> cleaned;
  for (auto& r : runs) {
    if (r.multiplicity < 0) throw std::invalid_argument("negative multiplicity");
    if (r.multiplicity == 0) continue;
    mpz_class order = abs(r.order);
    if (order == 0) {
      g.free_rank_ += r.multiplicity;
    } else if (order > 1) {
      cleaned.push_back({std::move(order), std::move(r.multiplicity)});
    }
  }
  if (cleaned.empty()) return g;

  std::sort(cleaned.begin(), cleaned.end(),
            [](const TorsionRun& a, const TorsionRun& b) { return a.order < b.order; });
  std::vector<TorsionRun> merged;
  for (auto& r : cleaned) {
    if (!merged.empty() && merged.back().order == r.order) {
      merged.back().multiplicity += r.multiplicity;
    } else {
      merged.push_back(std::move(r));
    }
  }
  bool chain = true;
  for (std::size_t i = 1; i < merged.size() && chain; ++i) {
    chain = mpz_divisible_p(merged[i].order.get_mpz_t(), merged[i - 1].order.get_mpz_t()) != 0;
  }
  if (chain) {
    g.torsion_ = std::move(merged);
    return g;
  }

  // General case: split every order over a coprime basis, sort exponents per
  // basis element, and reassemble the chain from the top.
  std::vector<mpz_class> orders;
  for (const auto& r : merged) orders.push_back(r.order);
  const std::vector<mpz_class> basis = gcd_free_basis(orders);

  struct Profile {
    mpz_class base;
    std::vector<std::pair<unsigned long, mpz_class>> runs;  // (exponent, count), descending
  };
  std::vector<Profile> profiles;
  std::vector<mpz_class> breakpoints;
  for (const auto& b : basis) {
    Profile prof{b, {}};
    for (const auto& r : merged) {
      if (unsigned long e = exponent_of(r.order, b); e > 0) prof.runs.emplace_back(e, r.multiplicity);
    }
    std::sort(prof.runs.begin(), prof.runs.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    mpz_class position = 0;
    for (const auto& [e, count] : prof.runs) {
      position += count;
      breakpoints.push_back(position);
    }
    profiles.push_back(std::move(prof));
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  std::vector<TorsionRun> descending;
  mpz_class start = 0;
  for (const auto& end : breakpoints) {
    mpz_class factor = 1;
    for (const auto& prof : profiles) {
      mpz_class position = 0;
      for (const auto& [e, count] : prof.runs) {
        if (start < position + count) {
          mpz_class power;
          mpz_pow_ui(power.get_mpz_t(), prof.base.get_mpz_t(), e);
          factor *= power;
          break;
        }
        position += count;
      }
    }
    mpz_class count = end - start;
    if (!descending.empty() && descending.back().order == factor) {
      descending.back().multiplicity += count;
    } else {
      descending.push_back({factor, count});
    }
    start = end;
  }
  g.torsion_.assign(descending.rbegin(), descending.rend());
  return g;
}

mpz_class AbelianGroup::torsion_count() const {
  mpz_class total = 0;
  for (const auto& r : torsion_) total += r.multiplicity;
  return total;
}

std::vector<mpz_class> AbelianGroup::invariant_factors(std::size_t limit) const {
  if (torsion_count() > mpz_class(std::to_string(limit))) {
    throw std::length_error("invariant-factor chain too long to expand");
  }
  std::vector<mpz_class> out;
  for (const auto& r : torsion_) {
    for (mpz_class i = 0; i < r.multiplicity; ++i) out.push_back(r.order);
  }
  return out;
}

mpz_class AbelianGroup::p_torsion_rank(const mpz_class& p) const {
  mpz_class total = 0;
  for (const auto& r : torsion_) {
    if (mpz_divisible_p(r.order.get_mpz_t(), p.get_mpz_t()) != 0) total += r.multiplicity;
  }
  return total;
}

AbelianGroup AbelianGroup::torsion_subgroup() const {
  AbelianGroup g = *this;
  g.free_rank_ = 0;
  return g;
}

std::vector<std::pair<mpz_class, unsigned long>> factor_prime_powers(mpz_class n) {
  if (n <= 0) throw std::invalid_argument("factor_prime_powers expects a positive integer");
  std::vector<std::pair<mpz_class, unsigned long>> out;
  auto strip = [&](const mpz_class& p) {
    unsigned long e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  for (unsigned long d = 3; d < 1'000'000 && mpz_class(d) * d <= n; d += 2) strip(d);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<AbelianGroup::TorsionRun> AbelianGroup::primary_decomposition() const {
  std::map<std::pair<mpz_class, unsigned long>, mpz_class> counts;
  for (const auto& r : torsion_) {
    for (const auto& pe : factor_prime_powers(r.order)) counts[pe] += r.multiplicity;
  }
  std::vector<TorsionRun> out;
  for (const auto& [pe, count] : counts) {
    mpz_class order;
    mpz_pow_ui(order.get_mpz_t(), pe.first.get_mpz_t(), pe.second);
    out.push_back({order, count});
  }
  return out;
}

std::string AbelianGroup::to_string(const std::string& generator) const {
  std::vector<std::string> terms;
  if (free_rank_ > 0) terms.push_back(power_term(generator, free_rank_));
  for (const auto& r : torsion_) terms.push_back(power_term("Z/" + r.order.get_str(), r.multiplicity));
  return join_terms(terms);
}

std::string AbelianGroup::to_primary_string(const std::string& generator) const {
  std::vector<std::string> terms;
  if (free_rank_ > 0) terms.push_back(power_term(generator, free_rank_));
  for (const auto& r : primary_decomposition()) {
    terms.push_back(power_term("Z/" + r.order.get_str(), r.multiplicity));
  }
  return join_terms(terms);
}

AbelianGroup AbelianGroup::operator+(const AbelianGroup& other) const {
  std::vector<TorsionRun> runs = torsion_;
  runs.insert(runs.end(), other.torsion_.begin(), other.torsion_.end());
  return from_runs(free_rank_ + other.free_rank_, std::move(runs));
}

AbelianGroup& AbelianGroup::operator+=(const AbelianGroup& other) {
  *this = *this + other;
  return *this;
}

AbelianGroup AbelianGroup::repeated(const mpz_class& copies) const {
  if (copies < 0) throw std::invalid_argument("negative multiplicity");
  if (copies == 0) return {};
  AbelianGroup g = *this;
  g.free_rank_ *= copies;
  for (auto& r : g.torsion_) r.multiplicity *= copies;
  return g;
}

std::ostream& operator<<(std::ostream& os, const AbelianGroup& group) {
  return os << group.to_string();
}

}  // namespace su2hom
