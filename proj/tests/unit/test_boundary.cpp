#include "doctest.h"
#include "frieze_lab/boundary.hpp"
#include "frieze_lab/error.hpp"

using namespace frieze_lab;

namespace {

RationalFunction rf(const char* s) { return RationalFunction::parse(s); }

std::string letters(const std::vector<Letter>& ls) {
  std::string s;
  for (Letter l : ls) s += char(l);
  return s;
}

std::vector<std::string> strings(const std::vector<RationalFunction>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

BoundaryEmbedding d4_all_in() {
  DTildeQuiver d = build_d_tilde(4, DTildeOrientation::all_in());
  return BoundaryEmbedding(build_dtilde_boundary(d, Seed::initial(d.quiver).x).word);
}

}  // namespace

TEST_CASE("cut reading of an affine A quiver") {
  Quiver theta({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CutReading r = generator_from_a_tilde(theta, 1, true);
  CHECK(letters(r.letters) == "xxxy");
  CHECK(r.vertices == std::vector<Vertex>{1, 2, 3, 4, 1});
  CHECK(letters(generator_from_a_tilde(theta, 1, false).letters) == "xyyy");

  Quiver kronecker({1, 2}, {{1, 2}, {1, 2}});
  CHECK(letters(generator_from_a_tilde(kronecker, 1, true).letters) == "xy");
  CHECK_THROWS_AS(generator_from_a_tilde(Quiver({1, 2, 3}, {{1, 2}, {2, 3}}), 1, true), Error);
  CHECK_THROWS_AS(generator_from_a_tilde(theta, 7, true), Error);
}

TEST_CASE("D~4 all-in boundary") {
  DTildeQuiver d = build_d_tilde(4, DTildeOrientation::all_in());
  DTildeBoundary b = build_dtilde_boundary(d, Seed::initial(d.quiver).x);
  CHECK(letters(b.word.left().letters) == "xyxxxyxx");
  CHECK(letters(b.word.root()->letters) == "xy");
  CHECK(letters(b.word.right().letters) == "yyxyyyxy");
  CHECK(strings(b.word.root()->values) == std::vector<std::string>{"u1*u2", "u3", "u4*u5"});
  CHECK(strings(b.word.left().values) ==
        std::vector<std::string>{"u1*u2", "u3", "u4*u5", "1", "u4*u5", "u3", "u1*u2", "1"});
  CHECK(strings(b.word.right().values) ==
        std::vector<std::string>{"u4*u5", "1", "u4*u5", "u3", "u1*u2", "1", "u1*u2", "u3"});
  CHECK(b.root.labels == std::vector<Vertex>{1, 3, 4});
  CHECK(b.word.is_admissible());

  DTildeBoundary with_u0 = build_dtilde_boundary(d, Seed::initial(d.quiver).x, true);
  CHECK(with_u0.word.left().values[3] == RationalFunction::var(0));
}

TEST_CASE("D~n boundary shape follows the spine orientation") {
  DTildeOrientation o = DTildeOrientation::canonical();
  o.chain_forward = {false};
  DTildeQuiver d = build_d_tilde(5, o);
  DTildeBoundary b = build_dtilde_boundary(d, Seed::initial(d.quiver).x);
  // Spine 1 -> 3 <- 4 -> 5.
  CHECK(letters(b.word.root()->letters) == "xyx");
  CHECK(letters(b.word.left().letters) == "xyx" "xx" "yxy" "xx");
  CHECK(letters(b.word.right().letters) == "yy" "yxy" "yy" "xyx");

}

TEST_CASE("mixed fork boundary carries the substitute value") {
  DTildeOrientation mixed = DTildeOrientation::all_in();
  mixed.arrow2_in = false;  // 1 -> 3 -> 2
  DTildeQuiver dm = build_d_tilde(4, mixed);
  DTildeBoundary b = build_dtilde_boundary(dm, Seed::initial(dm.quiver).x);
  CHECK(b.word.root()->values[0] == rf("u2*(1+u3)/u1"));
  // 1 -> 3 becomes 3 -> 1 after the mutation.
  CHECK(letters(b.word.root()->letters) == "yy");
  CHECK(b.word.is_admissible());
}

TEST_CASE("embedding coordinates and lookups") {
  BoundaryEmbedding e = d4_all_in();
  CHECK(e.coord(0) == Point{0, 0});
  CHECK(e.coord(1) == Point{1, 0});
  CHECK(e.coord(2) == Point{1, -1});
  CHECK(e.coord(3) == Point{1, -2});
  CHECK(e.coord(-1) == Point{-1, 0});
  CHECK(e.coord(-8) == Point{-6, 2});
  for (long i = -40; i < 40; ++i) {
    CHECK(e.vertex_at(e.coord(i)) == i);
    CHECK(e.side(e.coord(i)) == BoundaryEmbedding::Side::On);
  }
  CHECK(e.side({2, 0}) == BoundaryEmbedding::Side::Below);
  CHECK(e.side({0, -1}) == BoundaryEmbedding::Side::Above);
  CHECK(e.last_in_row(0) == 1);
  CHECK(e.first_in_col(1) == 1);
  CHECK(e.last_in_col(1) == 4);
}

TEST_CASE("word at a point") {
  BoundaryWord w = BoundaryWord::periodic({{1, 1, 1, 1}, {Letter::X, Letter::X, Letter::X, Letter::Y}});
  BoundaryEmbedding e(w);
  FiniteWord at = e.word_at_point({7, 0});
  CHECK(letters(at.letters) == "yxxxyx");
  CHECK(at.values.size() == 7);
  CHECK(letters(e.word_at_point({4, 0}).letters) == "yx");
  CHECK_THROWS_AS(e.word_at_point({3, 0}), Error);
  CHECK_THROWS_AS(e.word_at_point({0, -5}), Error);
}

TEST_CASE("word for a column") {
  BoundaryEmbedding e = d4_all_in();
  FiniteWord w = e.word_for_columns(1, 1);
  CHECK(letters(w.letters) == "xyyyx");
  CHECK(strings(w.values) == std::vector<std::string>{"u1*u2", "u3", "u4*u5", "1", "u4*u5", "u3"});
  CHECK(letters(e.word_for_columns(1, 2).letters) == "xyyyxyyyx");
  CHECK_THROWS_AS(e.word_for_columns(2, 1), Error);
}

TEST_CASE("non-admissible boundaries are rejected") {
  BoundaryWord w = BoundaryWord::periodic({{1, 1}, {Letter::X, Letter::X}});
  CHECK_FALSE(w.is_admissible());
  CHECK_THROWS_AS(BoundaryEmbedding{w}, Error);
}

TEST_CASE("boundary grammar") {
  BoundaryWord p = parse_boundary("^inf( x x x y )^inf");
  CHECK(p.is_periodic());
  CHECK(letters(p.left().letters) == "xxxy");
  CHECK(p.value(5).is_one());
  CHECK(letters(parse_boundary("^inf(xxxy)^inf").left().letters) == "xxxy");
  CHECK(parse_boundary("^inf(u1 x u2 y u1)^inf").value(1) == rf("u2"));

  DTildeQuiver d = build_d_tilde(5, DTildeOrientation::canonical());
  BoundaryWord b = build_dtilde_boundary(d, Seed::initial(d.quiver).x).word;
  BoundaryWord back = parse_boundary(b.to_string());
  for (long i = -30; i < 30; ++i) {
    CHECK(back.value(i) == b.value(i));
    CHECK(back.letter(i) == b.letter(i));
  }
  BoundaryWord odd = parse_boundary("^inf((1+u3)/u1 x y) (1+u3)/u1 x u2 (u2 y x)^inf");
  CHECK(odd.value(0) == rf("(1+u3)/u1"));
  CHECK(odd.value(1) == rf("u2"));
  CHECK(odd.value(2).is_one());
  CHECK(parse_boundary(odd.to_string()).value(0) == odd.value(0));

  CHECK_THROWS_AS(parse_boundary("( x y )^inf"), Error);
  CHECK_THROWS_AS(parse_boundary("^inf( x y"), Error);
  CHECK_THROWS_AS(parse_boundary("^inf( u1 u2 x y )^inf"), Error);
  CHECK_THROWS_AS(parse_boundary("^inf( u1 x y u2 )^inf"), Error);
  CHECK_THROWS_AS(parse_boundary("^inf( x y ) u1 x u2 ( x y )^inf"), Error);
  CHECK_THROWS_AS(parse_boundary("^inf( )^inf"), Error);
}
