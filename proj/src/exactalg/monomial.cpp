#include "frieze_lab/exactalg/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace frieze_lab {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
    degree_ += e;
  }
}

Monomial Monomial::var(Var v, std::uint32_t exp) { return Monomial({{v, exp}}); }

std::uint32_t Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0});
  return it != factors_.end() && it->first == v ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    m.factors_.push_back(f);
    m.degree_ += f.second;
  }
  return m;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + rhs.factors_.size());
  auto a = factors_.begin(), b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      m.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      m.factors_.push_back(*b++);
    } else {
      m.factors_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  m.degree_ = degree_ + rhs.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  assert(rhs.divides(*this));
  Monomial m;
  auto b = rhs.factors_.begin();
  for (const auto& [v, e] : factors_) {
    std::uint32_t sub = 0;
    if (b != rhs.factors_.end() && b->first == v) sub = (b++)->second;
    if (e > sub) m.factors_.emplace_back(v, e - sub);
  }
  m.degree_ = degree_ - rhs.degree_;
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      auto e = std::min(i->second, j->second);
      m.factors_.emplace_back(i->first, e);
      m.degree_ += e;
      ++i, ++j;
    }
  }
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  return a * b / gcd(a, b);
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [v, e] : factors_) {
    h ^= (std::size_t(v) << 20 | e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.rbegin(), j = fb.rbegin();
  for (; i != fa.rend() && j != fb.rend(); ++i, ++j) {
    if (i->first != j->first) return i->first <=> j->first;
    if (i->second != j->second) return i->second <=> j->second;
  }
  // Equal degree and a common prefix means both are exhausted together.
  return std::strong_ordering::equal;
}

}  // namespace frieze_lab
