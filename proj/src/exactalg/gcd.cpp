// Multivariate gcd over Z: content extraction plus a recursive primitive
// pseudo-remainder sequence in one main variable.
#include <algorithm>

#include "frieze_lab/exactalg/polynomial.hpp"

namespace frieze_lab {

namespace {

Polynomial positive(Polynomial p) {
  if (!p.is_zero() && p.leading().coeff < 0) p = -p;
  return p;
}

Polynomial leading_coeff_in(const Polynomial& p, Var v) {
  return p.coefficients_in(v).back();
}

// gcd of the coefficients of p viewed as a polynomial in v.
Polynomial content_in(const Polynomial& p, Var v) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial pseudo_remainder(Polynomial r, const Polynomial& b, Var v) {
  const std::uint32_t db = b.degree_in(v);
  const Polynomial lb = leading_coeff_in(b, v);
  while (!r.is_zero()) {
    const std::uint32_t dr = r.degree_in(v);
    if (dr < db) break;
    Polynomial lr = leading_coeff_in(r, v);
    r = lb * r - (lr * b).mul_term(Monomial::var(v, dr - db), 1);
  }
  return r;
}

// Both inputs have unit integer and monomial content and are non-constant.
Polynomial primitive_gcd(const Polynomial& a, const Polynomial& b) {
  if (divide_exact(a, b)) return positive(b);
  if (divide_exact(b, a)) return positive(a);

  std::vector<Var> va = a.variables(), vb = b.variables(), common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  if (common.empty()) return 1;
  Var v = *std::min_element(common.begin(), common.end(), [&](Var x, Var y) {
    return a.degree_in(x) + b.degree_in(x) < a.degree_in(y) + b.degree_in(y);
  });

  Polynomial ca = content_in(a, v), cb = content_in(b, v);
  Polynomial c = gcd(ca, cb);
  Polynomial A = *divide_exact(a, ca), B = *divide_exact(b, cb);
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  while (true) {
    if (B.degree_in(v) == 0) return c;
    Polynomial R = pseudo_remainder(A, B, v);
    if (R.is_zero()) return c * positive(B);
    if (R.degree_in(v) == 0) return c;
    R = *divide_exact(R, content_in(R, v));
    A = std::move(B);
    B = std::move(R);
  }
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  mpz_class ca = a.content(), cb = b.content(), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Monomial ma = a.monomial_content(), mb = b.monomial_content();
  Polynomial g0(Monomial::gcd(ma, mb), cg);
  Polynomial pa = a.div_term(ma, ca), pb = b.div_term(mb, cb);
  if (pa.is_constant() || pb.is_constant()) return g0;
  return g0 * primitive_gcd(pa, pb);
}

}  // namespace frieze_lab
