#include <set>

#include "doctest.h"
#include "frieze_lab/error.hpp"
#include "frieze_lab/frieze.hpp"

using namespace frieze_lab;

namespace {

RationalFunction rf(const char* s) { return RationalFunction::parse(s); }

std::vector<DTildeQuiver> orientations(int n) {
  std::vector<DTildeQuiver> out;
  for (int mask = 0; mask < 4; ++mask) {
    DTildeOrientation o;
    o.arrow1_in = o.arrow2_in = mask & 1;
    o.arrown_in = o.arrown1_in = mask & 2;
    if (n == 5) {
      out.push_back(build_d_tilde(n, o));
      o.chain_forward = {false};
    }
    out.push_back(build_d_tilde(n, o));
  }
  return out;
}

}  // namespace

TEST_CASE("D~4 all-in frieze values") {
  DTildeQuiver d = build_d_tilde(4, DTildeOrientation::all_in());
  FriezeSession f(Seed::initial(d.quiver));
  for (Vertex v = 1; v <= 5; ++v) CHECK(f.value(0, v) == RationalFunction::var(Var(v)));
  CHECK(f.value(1, 1) == rf("(1+u3)/u1"));
  CHECK(f.value(1, 2) == rf("(1+u3)/u2"));
  CHECK(modelled_value(f, 4, 0, 1) == rf("u1*u2"));
  CHECK(modelled_value(f, 4, 1, 4) == rf("(1+u3)^2/(u4*u5)"));
  CHECK(modelled_value(f, 4, 1, 1) == rf("(1+u3)^2/(u1*u2)"));
  // Hand-unrolled slice 1 at all ones: a(1,leaf) = 2, a(1,3) = (1 + 16)/1.
  CHECK(f.value(1, 3).evaluate([](Var) { return mpq_class(1); }) == 17);
  CHECK_THROWS_AS(modelled_value(f, 4, 0, 2), Error);
}

TEST_CASE("frieze rejects cyclic quivers") {
  Quiver tri({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}});
  CHECK_THROWS_AS(FriezeSession(Seed::initial(tri)), Error);
}

TEST_CASE("mesh relation forward and backward, Laurent with positive coefficients") {
  for (int n : {4, 5}) {
    for (const auto& d : orientations(n)) {
      FriezeSession f(Seed::initial(d.quiver));
      const Quiver& q = d.quiver;
      for (int k = -4; k < 4; ++k) {
        for (Vertex i : q.vertices()) {
          RationalFunction prod = 1;
          for (Vertex j : q.successors(i)) prod *= f.value(k, j);
          for (Vertex j : q.predecessors(i)) prod *= f.value(k + 1, j);
          CHECK(f.value(k, i) * f.value(k + 1, i) == RationalFunction(1) + prod);
          auto l = f.value(k, i).laurent();
          REQUIRE(l.has_value());
          for (const auto& t : l->numerator.terms()) CHECK(t.coeff > 0);
        }
      }
    }
  }
}

TEST_CASE("fork relations depend on the fork orientation") {
  for (int n : {4, 5}) {
    for (const auto& d : orientations(n)) {
      FriezeSession f(Seed::initial(d.quiver));
      for (int k = -3; k <= 3; ++k) {
        auto sq = [](const RationalFunction& a) { return (a + RationalFunction(1)).pow(2); };
        RationalFunction lhs1 = sq(f.value(k, 3));
        int s1 = d.fork1 == ForkKind::BothIn ? 1 : -1;
        CHECK(lhs1 == modelled_value(f, n, k, 1) * modelled_value(f, n, k + s1, 1));
        RationalFunction lhs2 = sq(f.value(k, n - 1));
        int s2 = d.fork2 == ForkKind::BothIn ? 1 : -1;
        CHECK(lhs2 == modelled_value(f, n, k, n) * modelled_value(f, n, k + s2, n));
      }
    }
  }
}

TEST_CASE("fork relations in the canonical orientation") {
  for (int n : {4, 5, 6}) {
    DTildeQuiver d = build_d_tilde(n, DTildeOrientation::canonical());
    FriezeSession f(Seed::initial(d.quiver));
    for (int k = -3; k <= 3; ++k) {
      CHECK((f.value(k, 3) + RationalFunction(1)).pow(2) ==
            modelled_value(f, n, k, 1) * modelled_value(f, n, k + 1, 1));
      CHECK((f.value(k, n - 1) + RationalFunction(1)).pow(2) ==
            modelled_value(f, n, k, n) * modelled_value(f, n, k - 1, n));
    }
  }
}

TEST_CASE("fork products times the leaf variables are perfect squares") {
  for (const auto& d : orientations(5)) {
    FriezeSession f(Seed::initial(d.quiver));
    for (int k = -3; k <= 3; ++k) {
      RationalFunction b = modelled_value(f, 5, k, 1) * rf("u1*u2");
      CHECK_NOTHROW(poly_sqrt(b.num()));
      CHECK_NOTHROW(poly_sqrt(b.den()));
      RationalFunction t = modelled_value(f, 5, k, 5) * rf("u5*u6");
      CHECK_NOTHROW(poly_sqrt(t.num()));
      CHECK_NOTHROW(poly_sqrt(t.den()));
    }
  }
}

TEST_CASE("unimodular rule on the interior lines of the modelled frieze") {
  for (int n : {4, 5}) {
    for (const auto& d : orientations(n)) {
      FriezeSession f(Seed::initial(d.quiver));
      const Quiver& q = d.quiver;
      auto line_of = [&](Vertex v) { return v == 2 ? 1 : v == n + 1 ? n : v; };
      for (int k = -4; k < 4; ++k) {
        for (Vertex i = 3; i <= n - 1; ++i) {
          // Neighbouring lines; a glued fork counts once.
          RationalFunction prod = 1;
          std::set<Vertex> seen;
          for (Vertex j : q.successors(i))
            if (seen.insert(line_of(j)).second) prod *= modelled_value(f, n, k, line_of(j));
          for (Vertex j : q.predecessors(i))
            if (seen.insert(line_of(j)).second) prod *= modelled_value(f, n, k + 1, line_of(j));
          CHECK(modelled_value(f, n, k, i) * modelled_value(f, n, k + 1, i) - prod == RationalFunction(1));
        }
      }
    }
  }
}
