#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frieze_lab/exactalg/rational_function.hpp"
#include "frieze_lab/quiver.hpp"

namespace frieze_lab {

// x steps one column right, y one row up.
enum class Letter : char { X = 'x', Y = 'y' };

// c_1 x_1 c_2 x_2 ... c_m x_m, repeated with c_1 following x_m.
struct Generator {
  std::vector<RationalFunction> values;
  std::vector<Letter> letters;

  bool has_both_letters() const;
};

// c_0 x_1 c_1 ... x_m c_m.
struct FiniteWord {
  std::vector<RationalFunction> values;
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
};

// Lattice point; rows grow downward, so the tiling lies below and to the
// right of the boundary.
struct Point {
  long col = 0;
  long row = 0;
  auto operator<=>(const Point&) const = default;
};

// Bi-infinite frieze boundary: either a single generator repeated both
// ways, or left generator, finite root, right generator. Vertex 0 is the
// first root vertex (or the first generator vertex when periodic); letter
// i sits between vertices i and i+1.
class BoundaryWord {
 public:
  // Throws Error on empty or malformed generators, or when the generator
  // values do not agree with the root at the two gluing vertices.
  static BoundaryWord periodic(Generator g);
  static BoundaryWord bi_generated(Generator left, FiniteWord root, Generator right);

  bool is_periodic() const { return !root_.has_value(); }
  const Generator& left() const { return left_; }
  const Generator& right() const { return right_; }
  const std::optional<FiniteWord>& root() const { return root_; }
  long root_length() const { return root_ ? long(root_->length()) : 0; }

  const RationalFunction& value(long i) const;
  Letter letter(long i) const;
  // Both tails contain both letters.
  bool is_admissible() const;

  BoundaryWord map_values(const std::function<RationalFunction(const RationalFunction&)>& f) const;
  std::string to_string() const;

 private:
  Generator left_, right_;
  std::optional<FiniteWord> root_;
};

// Coordinates of the boundary vertices, computed on demand.
class BoundaryEmbedding {
 public:
  enum class Side { Above, On, Below };

  // Throws Error when the word is not admissible.
  explicit BoundaryEmbedding(BoundaryWord word);

  const BoundaryWord& word() const { return word_; }
  Point coord(long i) const;
  std::optional<long> vertex_at(Point p) const;
  long first_in_row(long row) const;
  long last_in_row(long row) const;
  long first_in_col(long col) const;
  long last_in_col(long col) const;
  Side side(Point p) const;

  FiniteWord slice(long i0, long i1) const;
  // Boundary between the point's row and column; throws Error unless the
  // point lies strictly below the boundary.
  FiniteWord word_at_point(Point p) const;
  // Boundary through columns c_first..c_last plus one step on each side.
  FiniteWord word_for_columns(long c_first, long c_last) const;

 private:
  struct Step {
    long dc = 0, dr = 0;
  };
  static std::vector<Step> prefix(const std::vector<Letter>& letters);
  template <class Pred>
  long last_index_where(Pred pred) const;

  BoundaryWord word_;
  std::vector<Step> left_prefix_, right_prefix_, root_prefix_;
};

// Vertices and letters read around an oriented cycle (affine A) quiver.
struct CutReading {
  std::vector<Vertex> vertices;  // closes on the starting vertex
  std::vector<Letter> letters;
};

// Cuts the cycle at a vertex and reads it clockwise (increasing labels,
// cyclically) or anticlockwise: x when the arrow points along the reading
// direction, y otherwise. Throws Error when q is not a single cycle.
CutReading generator_from_a_tilde(const Quiver& q, Vertex cut, bool clockwise);

// Root vertices of the folded D~n path on the boundary, as boundary indices.
struct RootSpan {
  long first = 0;
  long last = 0;
  std::vector<Vertex> labels;  // spine vertices 1, 3, ..., n-1, n
};

struct DTildeBoundary {
  BoundaryWord word;
  RootSpan root;
};

// Boundary of the frieze attached to a D~n seed (vertex 1 carries x1*x2,
// vertex n carries xn*x(n+1)). The auxiliary vertices carry u0, or 1 by
// default. A mixed fork is first straightened by mutating at its leaf.
DTildeBoundary build_dtilde_boundary(const DTildeQuiver& d, const std::map<Vertex, RationalFunction>& x,
                                     bool keep_u0 = false);

// "^inf( gen ) root ( gen )^inf" or "^inf( gen )^inf", whitespace separated
// values and letters; missing values are 1 and runs such as "xxxy" expand.
BoundaryWord parse_boundary(std::string_view text);

}  // namespace frieze_lab
