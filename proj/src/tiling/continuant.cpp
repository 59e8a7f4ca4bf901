#include "frieze_lab/error.hpp"
#include "frieze_lab/tiling.hpp"

namespace frieze_lab {

namespace {

struct Row {
  RationalFunction p, q;
};

// Row times M(a, letter, b): x gives [[a, 1], [0, b]], y gives [[b, 0], [1, a]].
Row step(const Row& r, const RationalFunction& a, Letter l, const RationalFunction& b) {
  if (l == Letter::X) return {r.p * a, r.p + r.q * b};
  return {r.p * b + r.q, r.q * a};
}

RationalFunction word_product(Row row, const FiniteWord& w) {
  const std::size_t n = w.letters.size() - 1;
  RationalFunction den = 1;
  for (std::size_t i = 1; i <= n; ++i) den *= w.values[i];
  for (std::size_t i = 2; i <= n; ++i) row = step(row, w.values[i - 1], w.letters[i - 1], w.values[i]);
  return (row.p + row.q * w.values[n + 1]) / den;
}

}  // namespace

RationalFunction point_word_value(const FiniteWord& w) {
  if (w.letters.size() < 2 || w.letters.front() != Letter::Y || w.letters.back() != Letter::X)
    throw InternalError("point word must run from y to x");
  return word_product({1, w.values[0]}, w);
}

RationalFunction column_word_value(const FiniteWord& w) {
  if (w.letters.size() < 2 || w.letters.front() != Letter::X || w.letters.back() != Letter::X)
    throw InternalError("column word must start and end with x");
  return word_product({w.values[0], 1}, w);
}

RationalFunction continuant(const std::vector<RationalFunction>& a) {
  RationalFunction k = 1, prev = 0;
  for (const auto& x : a) {
    RationalFunction next = k * x - prev;
    prev = std::move(k);
    k = std::move(next);
  }
  return k;
}

}  // namespace frieze_lab
