#include <random>

#include "doctest.h"
#include "frieze_lab/error.hpp"
#include "frieze_lab/tiling.hpp"

using namespace frieze_lab;

namespace {

RationalFunction rf(const char* s) { return RationalFunction::parse(s); }
const char* kN = "u1*u2*u4*u5 + (1+u3)^2";

TilingSession d_tilde_session(int n, const DTildeOrientation& o) {
  DTildeQuiver d = build_d_tilde(n, o);
  return TilingSession(build_dtilde_boundary(d, Seed::initial(d.quiver).x).word);
}

// Tridiagonal determinant by cofactor expansion along the first row.
mpq_class tridiagonal_det(const std::vector<mpq_class>& a, std::size_t from = 0) {
  if (from >= a.size()) return 1;
  if (from + 1 == a.size()) return a[from];
  return a[from] * tridiagonal_det(a, from + 1) - tridiagonal_det(a, from + 2);
}

mpq_class det(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) std::swap(m[p], m[c]), d = -d;
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

}  // namespace

TEST_CASE("periodic all-ones boundary reproduces the integer grid") {
  TilingSession t(parse_boundary("^inf( x x x y )^inf"));
  // {row, first column, values...} in boundary coordinates.
  struct Run {
    long row, col;
    std::vector<long> values;
  };
  std::vector<Run> grid{{-4, 12, {1}},
                        {-3, 9, {1, 1, 1, 1}},
                        {-2, 6, {1, 1, 1, 1, 2, 3, 4}},
                        {-1, 3, {1, 1, 1, 1, 2, 3, 4, 9, 14, 19}},
                        {0, 0, {1, 1, 1, 1, 2, 3, 4, 9, 14, 19, 43, 67}},
                        {1, 0, {1, 2, 3, 4, 9, 14, 19, 43, 67}}};
  for (const auto& run : grid)
    for (std::size_t k = 0; k < run.values.size(); ++k)
      CHECK(t.tile_value({run.col + long(k), run.row}) == RationalFunction(run.values[k]));
  CHECK_THROWS_AS(t.tile_value({0, -1}), Error);
}

TEST_CASE("two-letter word gives the diamond rule") {
  FiniteWord w{{rf("u1"), rf("u2"), rf("u3")}, {Letter::Y, Letter::X}};
  CHECK(point_word_value(w) == rf("(1 + u1*u3)/u2"));
  FiniteWord bad{{rf("u1"), rf("u2"), rf("u3")}, {Letter::X, Letter::X}};
  CHECK_THROWS_AS(point_word_value(bad), InternalError);
}

TEST_CASE("D~4 tiling is unimodular and its window matches direct values") {
  TilingSession t = d_tilde_session(4, DTildeOrientation::all_in());
  Window w = t.window(-3, -2, 4, 3);
  for (long r = -2; r <= 3; ++r) {
    for (long c = -3; c <= 4; ++c) {
      const auto& cell = w[r + 2][c + 3];
      if (!cell) {
        CHECK_THROWS_AS(t.tile_value({c, r}), Error);
        continue;
      }
      CHECK(*cell == t.tile_value({c, r}));
      CHECK(cell->is_laurent());
      if (c < 4 && r < 3 && w[r + 2][c + 3 + 1] && w[r + 3][c + 3])
        CHECK(t.block_determinant({c, r}) == RationalFunction(1));
    }
  }
}

TEST_CASE("D~4 column coefficients") {
  TilingSession t = d_tilde_session(4, DTildeOrientation::all_in());
  CHECK(t.linearization_coefficient(1) == rf(kN) / rf("u3*u4*u5"));
  CHECK(t.linearization_coefficient(2) == rf(kN) / rf("u1*u2*u3"));
  CHECK(t.linearization_coefficient(3) == t.linearization_coefficient(1));
}

TEST_CASE("continuant is the tridiagonal determinant") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9), len(0, 8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<mpq_class> a(len(rng));
    std::vector<RationalFunction> f;
    for (auto& x : a) {
      x = mpq_class(num(rng), den(rng));
      x.canonicalize();
      f.push_back(RationalFunction(Polynomial(mpz_class(x.get_num())), Polynomial(mpz_class(x.get_den()))));
    }
    std::vector<std::vector<mpq_class>> m(a.size(), std::vector<mpq_class>(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      m[i][i] = a[i];
      if (i + 1 < a.size()) m[i][i + 1] = m[i + 1][i] = 1;
    }
    mpq_class expected = det(m);
    CHECK(expected == tridiagonal_det(a));
    CHECK(continuant(f).evaluate([](Var) { return mpq_class(0); }) == expected);
  }
  CHECK(continuant({rf("u1"), rf("u2")}) == rf("u1*u2 - 1"));
}

TEST_CASE("column word equals the continuant of column coefficients") {
  for (auto [n, o] : {std::pair{4, DTildeOrientation::all_in()}, std::pair{5, DTildeOrientation::canonical()}}) {
    TilingSession t = d_tilde_session(n, o);
    for (long c0 = -2; c0 <= 3; ++c0) {
      std::vector<RationalFunction> alphas;
      for (long c = c0; c < c0 + 3; ++c) {
        alphas.push_back(t.linearization_coefficient(c));
        CHECK(t.continuant_via_word(c0, c) == continuant(alphas));
      }
    }
  }
  TilingSession p(parse_boundary("^inf( u1 x u2 x u3 y u4 y )^inf"));
  std::vector<RationalFunction> alphas;
  for (long c = 0; c < 4; ++c) {
    alphas.push_back(p.linearization_coefficient(c));
    CHECK(p.continuant_via_word(0, c) == continuant(alphas));
  }
}

TEST_CASE("rays") {
  TilingSession t(parse_boundary("^inf( x x x y )^inf"));
  auto r = t.ray_values({4, 0}, {1, 0}, 3);
  CHECK(r == std::vector<RationalFunction>{2, 3, 4});
}
