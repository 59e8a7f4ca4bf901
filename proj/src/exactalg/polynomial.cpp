#include "frieze_lab/exactalg/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "frieze_lab/error.hpp"

namespace frieze_lab {

namespace {

bool term_greater(const Term& a, const Term& b) { return grlex(a.mono, b.mono) > 0; }

void append_var_power(std::ostream& os, const Monomial& m) {
  bool first = true;
  for (const auto& [v, e] : m.factors()) {
    if (!first) os << '*';
    first = false;
    os << 'u' << v;
    if (e != 1) os << '^' << e;
  }
}

}  // namespace

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back({Monomial(), mpz_class(c)});
}

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Polynomial::Polynomial(Monomial m, mpz_class c) {
  if (c != 0) terms_.push_back({std::move(m), std::move(c)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().coeff == 0) p.terms_.pop_back();
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_[0].mono;
  for (const auto& t : terms_) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, t.mono);
  }
  return g;
}

std::vector<Var> Polynomial::variables() const {
  std::vector<Var> vs;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) vs.push_back(f.first);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::uint32_t Polynomial::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  for (const auto& t : terms_) buckets[t.mono.exponent(v)].push_back({t.mono.without(v), t.coeff});
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  // Removing v from a grlex-sorted run keeps it sorted within a bucket
  // only up to degree ties, so re-sort.
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial p;
  p.terms_.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin(), b = rhs.terms_.begin();
  while (a != terms_.end() && b != rhs.terms_.end()) {
    auto c = grlex(a->mono, b->mono);
    if (c > 0) {
      p.terms_.push_back(*a++);
    } else if (c < 0) {
      p.terms_.push_back(*b++);
    } else {
      mpz_class s = a->coeff + b->coeff;
      if (s != 0) p.terms_.push_back({a->mono, std::move(s)});
      ++a, ++b;
    }
  }
  p.terms_.insert(p.terms_.end(), a, terms_.end());
  p.terms_.insert(p.terms_.end(), b, rhs.terms_.end());
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  if (rhs.is_term()) return mul_term(rhs.terms_[0].mono, rhs.terms_[0].coeff);
  if (is_term()) return rhs.mul_term(terms_[0].mono, terms_[0].coeff);
  std::vector<Term> out;
  out.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) out.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(std::move(out));
}

Polynomial Polynomial::mul_term(const Monomial& m, const mpz_class& c) const {
  if (c == 0) return {};
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::div_term(const Monomial& m, const mpz_class& c) const {
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    p.terms_.push_back({t.mono / m, std::move(q)});
  }
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = 1, base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

mpq_class Polynomial::evaluate(const Valuation& val) const {
  std::map<std::pair<Var, std::uint32_t>, mpq_class> powers;
  auto power = [&](Var v, std::uint32_t e) -> const mpq_class& {
    auto [it, fresh] = powers.try_emplace({v, e});
    if (fresh) {
      mpq_class x = val(v);
      mpz_class n, d;
      mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), e);
      mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), e);
      it->second = mpq_class(n, d);
      it->second.canonicalize();
    }
    return it->second;
  };
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class x = t.coeff;
    for (const auto& [v, e] : t.mono.factors()) x *= power(v, e);
    sum += x;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (t.mono.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      append_var_power(os, t.mono);
    }
  }
  return os.str();
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != rhs.terms_[i].coeff || !(terms_[i].mono == rhs.terms_[i].mono))
      return false;
  return true;
}

std::size_t Polynomial::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    std::size_t c = mpz_fdiv_ui(t.coeff.get_mpz_t(), 1000000007UL) * 2 + (t.coeff < 0);
    h ^= t.mono.hash() + c * 0x100000001b3ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  if (a.is_zero()) return Polynomial();
  if (b.is_term()) {
    const auto& [m, c] = b.leading();
    for (const auto& t : a.terms())
      if (!m.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
        return std::nullopt;
    return a.div_term(m, c);
  }
  // Cheap necessary conditions before the long division.
  if (!b.leading().mono.divides(a.leading().mono) || !b.trailing().mono.divides(a.trailing().mono))
    return std::nullopt;
  for (Var v : b.variables())
    if (b.degree_in(v) > a.degree_in(v)) return std::nullopt;

  // Remainder kept in an ordered map so each step touches only |b| terms.
  auto greater = [](const Monomial& x, const Monomial& y) { return grlex(x, y) > 0; };
  std::map<Monomial, mpz_class, decltype(greater)> r(greater);
  for (const auto& t : a.terms()) r.emplace(t.mono, t.coeff);
  const Term& lb = b.leading();
  std::vector<Term> quotient;
  while (!r.empty()) {
    auto lr = r.begin();
    if (!lb.mono.divides(lr->first) || !mpz_divisible_p(lr->second.get_mpz_t(), lb.coeff.get_mpz_t()))
      return std::nullopt;
    Term q{lr->first / lb.mono, 0};
    mpz_divexact(q.coeff.get_mpz_t(), lr->second.get_mpz_t(), lb.coeff.get_mpz_t());
    r.erase(lr);
    for (auto t = std::next(b.terms().begin()); t != b.terms().end(); ++t) {
      auto [it, fresh] = r.try_emplace(t->mono * q.mono);
      it->second -= t->coeff * q.coeff;
      if (it->second == 0) r.erase(it);
    }
    quotient.push_back(std::move(q));
  }
  // Quotient terms were produced in strictly descending order.
  return Polynomial::from_terms(std::move(quotient));
}

Polynomial poly_sqrt(const Polynomial& p) {
  if (p.is_zero()) return {};
  auto fail = [] { throw Error("polynomial is not a perfect square"); };
  const Term& lead = p.leading();
  if (lead.coeff < 0 || !mpz_perfect_square_p(lead.coeff.get_mpz_t())) fail();
  std::vector<Monomial::Factor> half;
  for (const auto& [v, e] : lead.mono.factors()) {
    if (e % 2) fail();
    half.emplace_back(v, e / 2);
  }
  Term root_lead{Monomial(half), sqrt(lead.coeff)};
  Polynomial root(root_lead.mono, root_lead.coeff);
  Polynomial twice_lead(root_lead.mono, 2 * root_lead.coeff);
  Polynomial r = p - root * root;
  while (!r.is_zero()) {
    // The leading term of r must come from 2 * lead(root) * next.
    const Term& lr = r.leading();
    if (!root_lead.mono.divides(lr.mono)) fail();
    mpz_class two_c = 2 * root_lead.coeff;
    if (!mpz_divisible_p(lr.coeff.get_mpz_t(), two_c.get_mpz_t())) fail();
    Monomial m = lr.mono / root_lead.mono;
    if (grlex(m, root.trailing().mono) >= 0) fail();
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), lr.coeff.get_mpz_t(), two_c.get_mpz_t());
    Polynomial t(m, c);
    r -= (root + root + t) * t;
    root += t;
  }
  return root;
}

}  // namespace frieze_lab
