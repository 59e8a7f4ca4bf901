#include "doctest.h"
#include "frieze_lab/error.hpp"
#include "frieze_lab/quiver.hpp"

using namespace frieze_lab;

namespace {
RationalFunction rf(const char* s) { return RationalFunction::parse(s); }
const char* kN = "u1*u2*u4*u5 + (1+u3)^2";
RationalFunction over(const char* den) { return rf(kN) / rf(den); }
}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(Quiver({1, 2}, {{1, 1}}), Error);
  CHECK_THROWS_AS(Quiver({1, 2}, {{1, 2}, {2, 1}}), Error);
  CHECK_THROWS_AS(Quiver({1, 2}, {{1, 3}}), Error);
  CHECK_THROWS_AS(Quiver({1, 1}, {}), Error);
  Quiver k({1, 2}, {{1, 2}, {1, 2}});
  CHECK(k.arrow_count(1, 2) == 2);
  CHECK(k.successors(1) == std::vector<Vertex>{2, 2});
}

TEST_CASE("mutation reverses, composes and cancels 2-cycles") {
  Quiver q({1, 2, 3}, {{1, 2}, {2, 3}});
  Quiver m = q.mutate(2);
  CHECK(m.arrow_count(2, 1) == 1);
  CHECK(m.arrow_count(3, 2) == 1);
  CHECK(m.arrow_count(1, 3) == 1);
  CHECK(m.mutate(2) == q);

  Quiver tri({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}});
  Quiver t2 = tri.mutate(2);
  CHECK(t2.arrow_count(1, 3) == 0);
  CHECK(t2.arrow_count(3, 1) == 0);
  CHECK(t2.num_arrows() == 2);
}

TEST_CASE("seed mutation is an involution") {
  DTildeQuiver d = build_d_tilde(5, DTildeOrientation::canonical());
  Seed s = Seed::initial(d.quiver);
  for (Vertex v : d.quiver.vertices()) {
    Seed back = s.mutate(v).mutate(v);
    CHECK(back.quiver == s.quiver);
    CHECK(back.x == s.x);
  }
  CHECK(exchange(s, 1) == rf("(1 + u3)/u1"));
}

TEST_CASE("D~n construction and classification") {
  DTildeQuiver d4 = build_d_tilde(4, DTildeOrientation::all_in());
  CHECK(d4.quiver.num_arrows() == 4);
  CHECK(d4.quiver.arrow_count(5, 3) == 1);
  CHECK(d4.spine() == std::vector<Vertex>{1, 3, 4});
  CHECK(d4.fork1 == ForkKind::BothIn);

  DTildeOrientation o = DTildeOrientation::canonical();
  o.arrow2_in = false;
  o.chain_forward = {false, true};
  DTildeQuiver d6 = build_d_tilde(6, o);
  CHECK(d6.fork1 == ForkKind::Mixed);
  CHECK(d6.fork2 == ForkKind::BothOut);
  CHECK(d6.quiver.arrow_count(4, 3) == 1);
  CHECK(d6.spine() == std::vector<Vertex>{1, 3, 4, 5, 6});

  DTildeQuiver again = classify_d_tilde(d6.quiver);
  CHECK(again.n == 6);
  CHECK(again.fork1 == ForkKind::Mixed);
  CHECK(again.quiver == d6.quiver);

  CHECK_THROWS_AS(build_d_tilde(3, {}), Error);
  CHECK_THROWS_AS(build_d_tilde(6, {true, true, true, true, {true}}), Error);
  CHECK_THROWS_AS(classify_d_tilde(Quiver({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}})), Error);
}

TEST_CASE("reduced walks") {
  DTildeQuiver d = build_d_tilde(5, DTildeOrientation::canonical());
  Walk w = reduced_walk(d.quiver, 1, 6);
  CHECK(w.vertices() == std::vector<Vertex>{1, 3, 4, 6});
  CHECK(w.steps[0].forward);
  CHECK(w.steps[2].forward);
  Walk back = reduced_walk(d.quiver, 6, 2);
  CHECK(back.vertices() == std::vector<Vertex>{6, 4, 3, 2});
  CHECK_FALSE(back.steps[0].forward);
  CHECK(reduced_walk(d.quiver, 4, 4).steps.empty());
  CHECK_THROWS_AS(reduced_walk(Quiver({1, 2}, {}), 1, 2), Error);
}

TEST_CASE("walk variables on D~4 reproduce the rank-2 tube mouths") {
  DTildeQuiver d = build_d_tilde(4, DTildeOrientation::all_in());
  Seed s = Seed::initial(d.quiver);
  auto walk = [&](Vertex a, Vertex b) { return walk_cluster_variable(s, reduced_walk(d.quiver, a, b)); };
  CHECK(walk(1, 5) == over("u1*u3*u5"));
  CHECK(walk(2, 4) == over("u2*u3*u4"));
  CHECK(walk(1, 4) == over("u1*u3*u4"));
  CHECK(walk(2, 5) == over("u2*u3*u5"));
  // Reversing a walk does not change the module.
  CHECK(walk(5, 1) == walk(1, 5));
}

TEST_CASE("length-zero walk is the one-step mutation") {
  DTildeQuiver d = build_d_tilde(5, DTildeOrientation::canonical());
  Seed s = Seed::initial(d.quiver);
  for (Vertex v : d.quiver.vertices())
    CHECK(walk_cluster_variable(s, Walk{v, {}}) == exchange(s, v));
}

TEST_CASE("non-reduced walk is rejected") {
  DTildeQuiver d = build_d_tilde(4, DTildeOrientation::all_in());
  Seed s = Seed::initial(d.quiver);
  Walk w{1, {{{1, 3}, true}, {{1, 3}, false}}};
  CHECK_THROWS_AS(walk_cluster_variable(s, w), Error);
}
