#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace frieze_lab {

// Variable index; u0 is the auxiliary variable, u1.. the cluster variables.
using Var = std::uint32_t;

// Product of variable powers, stored sparsely and sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  static Monomial var(Var v, std::uint32_t exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(Var v) const;

  bool divides(const Monomial& other) const;
  Monomial without(Var v) const;

  Monomial operator*(const Monomial& rhs) const;
  // Precondition: rhs divides *this.
  Monomial operator/(const Monomial& rhs) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& rhs) const { return factors_ == rhs.factors_; }
  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

// Graded lex with u0 < u1 < u2 < ...: total degree first, then the exponent
// of the highest variable where the two differ.
std::strong_ordering grlex(const Monomial& a, const Monomial& b);

}  // namespace frieze_lab
