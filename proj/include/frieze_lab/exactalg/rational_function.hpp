#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "frieze_lab/exactalg/polynomial.hpp"

namespace frieze_lab {

// numerator / monomial, the shape every cluster variable takes.
struct LaurentForm {
  Polynomial numerator;
  Monomial denominator;
};

// Element of Q(u0, u1, ...) kept in canonical form: numerator and
// denominator coprime, integer contents coprime, denominator leading
// coefficient positive. Equality is structural.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  // Throws Error on a zero denominator.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction var(Var v) { return Polynomial::var(v); }
  static RationalFunction parse(std::string_view text);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;
  RationalFunction operator*(const RationalFunction& rhs) const;
  RationalFunction operator/(const RationalFunction& rhs) const;
  RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
  RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }
  RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }
  RationalFunction& operator/=(const RationalFunction& rhs) { return *this = *this / rhs; }
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  std::optional<LaurentForm> laurent() const;
  bool is_laurent() const { return laurent().has_value(); }

  // Throws Error when the denominator vanishes at the point.
  mpq_class evaluate(const Valuation& val) const;
  RationalFunction substitute(const std::map<Var, RationalFunction>& subs) const;
  std::vector<Var> variables() const;

  std::string to_string() const;
  bool operator==(const RationalFunction& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }
  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

 private:
  struct Raw {};
  RationalFunction(Raw, Polynomial num, Polynomial den)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

struct RationalFunctionHash {
  std::size_t operator()(const RationalFunction& f) const { return f.hash(); }
};

}  // namespace frieze_lab
