#include "su2hom/graded_table.hpp"

#include <charconv>
#include <stdexcept>

#include "su2hom/exact_linalg.hpp"

namespace su2hom {

Coefficients Coefficients::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("coefficient field characteristic must be prime: " + std::to_string(p));
  return Coefficients(Kind::prime_field, p);
}

Coefficients Coefficients::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0) {
    digits = text.substr(3);
  } else if (text.size() > 1 && text[0] == 'F') {
    digits = text.substr(1);
  } else {
    throw std::invalid_argument("unknown coefficient ring '" + text + "' (expected Z, Q, F<p> or Fp:<p>)");
  }
  std::uint64_t p = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty()) {
    throw std::invalid_argument("bad field characteristic in '" + text + "'");
  }
  return prime_field(p);
}

std::string Coefficients::name() const {
  switch (kind_) {
    case Kind::integers:
      return "Z";
    case Kind::rationals:
      return "Q";
    case Kind::prime_field:
      return "F" + std::to_string(prime_);
  }
  return "?";
}

const AbelianGroup& GradedGroupTable::at(int j) const {
  static const AbelianGroup kTrivial;
  auto it = groups_.find(j);
  return it == groups_.end() ? kTrivial : it->second;
}

void GradedGroupTable::set(int j, AbelianGroup group) {
  if (coefficients_.is_field() && !group.is_free()) {
    throw std::invalid_argument("field-coefficient groups must be torsion-free");
  }
  if (group.is_trivial()) {
    groups_.erase(j);
  } else {
    groups_[j] = std::move(group);
  }
}

void GradedGroupTable::add(int j, const AbelianGroup& group) { set(j, at(j) + group); }

GradedGroupTable& GradedGroupTable::operator+=(const GradedGroupTable& other) {
  if (!(other.coefficients_ == coefficients_) || other.reduced_ != reduced_) {
    throw std::invalid_argument("direct sum of tables with different coefficients or reduction");
  }
  for (const auto& [j, g] : other.groups_) add(j, g);
  return *this;
}

GradedGroupTable GradedGroupTable::repeated(const mpz_class& copies) const {
  GradedGroupTable out(coefficients_, reduced_);
  for (const auto& [j, g] : groups_) out.set(j, g.repeated(copies));
  return out;
}

std::optional<int> GradedGroupTable::top_degree() const {
  if (groups_.empty()) return std::nullopt;
  return groups_.rbegin()->first;
}

std::optional<int> GradedGroupTable::bottom_degree() const {
  if (groups_.empty()) return std::nullopt;
  return groups_.begin()->first;
}

mpz_class GradedGroupTable::euler_characteristic() const {
  mpz_class chi = 0;
  for (const auto& [j, g] : groups_) {
    if (j % 2 == 0) {
      chi += g.free_rank();
    } else {
      chi -= g.free_rank();
    }
  }
  return chi;
}

GradedGroupTable GradedGroupTable::unreduced() const {
  if (!reduced_) throw std::logic_error("table is already unreduced");
  GradedGroupTable out = *this;
  out.reduced_ = false;
  out.add(0, AbelianGroup::free(1));
  return out;
}

GradedGroupTable change_coefficients(const GradedGroupTable& integral, const Coefficients& target) {
  if (integral.coefficients().kind() != Coefficients::Kind::integers) {
    throw std::invalid_argument("change_coefficients expects an integral table");
  }
  if (!target.is_field()) return integral;
  GradedGroupTable out(target, integral.reduced());
  const mpz_class p(std::to_string(target.characteristic()));
  for (const auto& [j, g] : integral.groups()) {
    if (target.kind() == Coefficients::Kind::rationals) {
      out.add(j, AbelianGroup::free(g.free_rank()));
    } else {
      // ⊗ F_p contributes to degree j, Tor(-, F_p) to degree j-1.
      out.add(j, AbelianGroup::free(g.free_rank() + g.p_torsion_rank(p)));
      out.add(j - 1, AbelianGroup::free(g.p_torsion_rank(p)));
    }
  }
  return out;
}

GradedGroupTable homology_from_cohomology(const GradedGroupTable& integral_cohomology) {
  if (integral_cohomology.coefficients().kind() != Coefficients::Kind::integers) {
    throw std::invalid_argument("homology_from_cohomology expects an integral table");
  }
  GradedGroupTable out(Coefficients::integers(), integral_cohomology.reduced());
  for (const auto& [j, g] : integral_cohomology.groups()) {
    out.add(j, AbelianGroup::free(g.free_rank()));
    out.add(j - 1, g.torsion_subgroup());
  }
  return out;
}

}  // namespace su2hom
