#include "frieze_lab/exactalg/rational_function.hpp"

#include <algorithm>

#include "frieze_lab/error.hpp"

namespace frieze_lab {

namespace {

void strip_common_term(Polynomial& num, Polynomial& den) {
  mpz_class cn = num.content(), cd = den.content(), c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  Monomial m = Monomial::gcd(num.monomial_content(), den.monomial_content());
  if (c == 1 && m.is_one()) return;
  num = num.div_term(m, c);
  den = den.div_term(m, c);
}

void fix_sign(Polynomial& num, Polynomial& den) {
  if (den.leading().coeff < 0) {
    num = -num;
    den = -den;
  }
}

// The term c*m is a (signed) monomial denominator.
bool is_term_den(const Polynomial& den) { return den.is_term(); }

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error("zero denominator");
  if (num.is_zero()) {
    den_ = 1;
    return;
  }
  strip_common_term(num, den);
  if (!is_term_den(den)) {
    // Laurent fast path: the non-monomial part of den often divides num.
    mpz_class dc = den.content();
    Monomial dm = den.monomial_content();
    Polynomial core = den.div_term(dm, dc);
    if (auto q = divide_exact(num, core)) {
      num = std::move(*q);
      den = Polynomial(dm, dc);
      strip_common_term(num, den);
    } else {
      Polynomial g = gcd(num, den);
      if (!g.is_one()) {
        num = *divide_exact(num, g);
        den = *divide_exact(den, g);
      }
    }
  }
  fix_sign(num, den);
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::operator-() const { return {Raw{}, -num_, den_}; }

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  if (den_ == rhs.den_) {
    if (den_.is_one()) return {Raw{}, num_ + rhs.num_, den_};
    return {num_ + rhs.num_, den_};
  }
  if (den_.is_term() && rhs.den_.is_term()) {
    const Term& a = den_.leading();
    const Term& b = rhs.den_.leading();
    Monomial l = Monomial::lcm(a.mono, b.mono);
    mpz_class cl;
    mpz_lcm(cl.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
    Polynomial n = num_.mul_term(l / a.mono, cl / a.coeff) + rhs.num_.mul_term(l / b.mono, cl / b.coeff);
    return {std::move(n), Polynomial(l, cl)};
  }
  return {num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
  return *this + (-rhs);
}

namespace {

// Divides num and den by their gcd, trying den | num first.
void cancel(Polynomial& num, Polynomial& den) {
  if (den.is_one()) return;
  if (!den.is_term()) {
    if (auto q = divide_exact(num, den)) {
      num = std::move(*q);
      den = 1;
      return;
    }
  }
  Polynomial g = gcd(num, den);
  if (!g.is_one()) {
    num = *divide_exact(num, g);
    den = *divide_exact(den, g);
  }
}

}  // namespace

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  if (den_.is_one() && rhs.den_.is_one()) return {Raw{}, num_ * rhs.num_, den_};
  // Both operands are canonical, so cancelling across is enough.
  Polynomial n1 = num_, d2 = rhs.den_, n2 = rhs.num_, d1 = den_;
  cancel(n1, d2);
  cancel(n2, d1);
  Polynomial num = n1 * n2, den = d1 * d2;
  fix_sign(num, den);
  return {Raw{}, std::move(num), std::move(den)};
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Polynomial num = den_, den = num_;
  fix_sign(num, den);
  return {Raw{}, std::move(num), std::move(den)};
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
  return *this * rhs.inverse();
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Polynomial num = num_.pow(unsigned(e)), den = den_.pow(unsigned(e));
  return {Raw{}, std::move(num), std::move(den)};
}

std::optional<LaurentForm> RationalFunction::laurent() const {
  if (!den_.is_term() || den_.leading().coeff != 1) return std::nullopt;
  return LaurentForm{num_, den_.leading().mono};
}

mpq_class RationalFunction::evaluate(const Valuation& val) const {
  mpq_class d = den_.evaluate(val);
  if (d == 0) throw Error("denominator vanishes at the evaluation point");
  return num_.evaluate(val) / d;
}

namespace {

// p(subs) as numerator over the common denominator prod q_v^deg_v(p).
std::pair<Polynomial, Polynomial> substitute_poly(const Polynomial& p,
                                                  const std::map<Var, RationalFunction>& subs) {
  std::map<Var, std::uint32_t> degree;
  for (const auto& t : p.terms())
    for (const auto& [v, e] : t.mono.factors())
      if (subs.count(v)) degree[v] = std::max(degree[v], e);
  std::map<std::tuple<Var, std::uint32_t, bool>, Polynomial> cache;
  auto power = [&](Var v, std::uint32_t e, bool numerator) -> const Polynomial& {
    auto [it, fresh] = cache.try_emplace({v, e, numerator});
    if (fresh) {
      const RationalFunction& f = subs.at(v);
      it->second = (numerator ? f.num() : f.den()).pow(e);
    }
    return it->second;
  };
  Polynomial num;
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Factor> kept;
    Polynomial x = 1;
    for (const auto& [v, e] : t.mono.factors()) {
      if (!subs.count(v)) {
        kept.emplace_back(v, e);
        continue;
      }
      x *= power(v, e, true);
    }
    for (const auto& [v, d] : degree) {
      std::uint32_t e = t.mono.exponent(v);
      if (d > e) x *= power(v, d - e, false);
    }
    num += x.mul_term(Monomial(kept), t.coeff);
  }
  Polynomial den = 1;
  for (const auto& [v, d] : degree) den *= power(v, d, false);
  return {std::move(num), std::move(den)};
}

}  // namespace

RationalFunction RationalFunction::substitute(const std::map<Var, RationalFunction>& subs) const {
  auto [nn, nd] = substitute_poly(num_, subs);
  auto [dn, dd] = substitute_poly(den_, subs);
  if (dn.is_zero()) throw Error("substitution makes the denominator vanish");
  return RationalFunction(nn, nd) / RationalFunction(dn, dd);
}

std::vector<Var> RationalFunction::variables() const {
  std::vector<Var> a = num_.variables(), b = den_.variables(), out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string(), d = den_.to_string();
  const bool num_simple = num_.is_term() && num_.leading().coeff > 0 && num_.leading().mono.degree() <= 1 &&
                          (num_.leading().mono.is_one() || num_.leading().coeff == 1);
  const bool den_simple = den_.is_term() && den_.leading().mono.degree() <= 1 &&
                          (den_.leading().mono.is_one() || den_.leading().coeff == 1);
  return (num_simple ? n : "(" + n + ")") + "/" + (den_simple ? d : "(" + d + ")");
}

}  // namespace frieze_lab
