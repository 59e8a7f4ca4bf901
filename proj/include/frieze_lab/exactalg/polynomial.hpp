#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frieze_lab/exactalg/monomial.hpp"

namespace frieze_lab {

struct Term {
  Monomial mono;
  mpz_class coeff;
};

// Values for variables during numeric evaluation.
using Valuation = std::function<mpq_class(Var)>;

// Sparse multivariate polynomial over Z. Terms are kept in descending
// graded-lex order with nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT: integer constants convert implicitly
  Polynomial(const mpz_class& c);  // NOLINT
  Polynomial(Monomial m, mpz_class c);

  static Polynomial var(Var v) { return Polynomial(Monomial::var(v), 1); }
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_term() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }

  // Positive gcd of the coefficients; zero for the zero polynomial.
  mpz_class content() const;
  Monomial monomial_content() const;
  std::vector<Var> variables() const;
  std::uint32_t degree_in(Var v) const;
  std::uint32_t total_degree() const;
  // Coefficients with respect to v; entry e multiplies v^e.
  std::vector<Polynomial> coefficients_in(Var v) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial& operator+=(const Polynomial& rhs) { return *this = *this + rhs; }
  Polynomial& operator-=(const Polynomial& rhs) { return *this = *this - rhs; }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
  Polynomial mul_term(const Monomial& m, const mpz_class& c) const;
  // Precondition: the term divides every term of *this.
  Polynomial div_term(const Monomial& m, const mpz_class& c) const;
  Polynomial pow(unsigned e) const;

  mpq_class evaluate(const Valuation& val) const;
  std::string to_string() const;

  bool operator==(const Polynomial& rhs) const;
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

// Greatest common divisor with positive leading coefficient (content included).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Square root with positive leading coefficient; throws Error when p is not
// the square of a polynomial.
Polynomial poly_sqrt(const Polynomial& p);

}  // namespace frieze_lab
