#pragma once

#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "frieze_lab/boundary.hpp"

namespace frieze_lab {

// Tile entry of a point from its boundary word b0 y ... x b_{n+1}.
RationalFunction point_word_value(const FiniteWord& w);
// Tube coefficient from a column word b0 x ... x b_{n+1}.
RationalFunction column_word_value(const FiniteWord& w);
// Determinant of the tridiagonal matrix with a_1..a_m on the diagonal and
// ones beside it; 1 for the empty sequence.
RationalFunction continuant(const std::vector<RationalFunction>& a);

using Window = std::vector<std::vector<std::optional<RationalFunction>>>;

// SL2-tiling determined by an admissible boundary. Thread-safe; values are
// cached per point.
class TilingSession {
 public:
  explicit TilingSession(BoundaryWord word);

  const BoundaryEmbedding& embedding() const { return emb_; }

  // Boundary label on the boundary, matrix product below; Error above.
  RationalFunction tile_value(Point p) const;
  std::vector<RationalFunction> ray_values(Point origin, Point step, int count) const;
  // Rows r0..r1, columns c0..c1; cells above the boundary are empty.
  // Interior cells use the unimodular recurrence and about one in twenty is
  // recomputed directly; a disagreement raises InternalError.
  Window window(long c0, long r0, long c1, long r1) const;
  // det [[t(p), t(p + x)], [t(p + y), t(p + x + y)]] with rows growing down.
  RationalFunction block_determinant(Point top_left) const;

  // (t(c-1, r) + t(c+1, r)) / t(c, r) for a row below the boundary; checked
  // on a second row and against the column word.
  RationalFunction linearization_coefficient(long col) const;
  RationalFunction continuant_via_word(long c_first, long c_last) const;

 private:
  struct PointHash {
    std::size_t operator()(Point p) const { return std::size_t(p.col) * 0x9e3779b97f4a7c15ULL ^ std::size_t(p.row); }
  };

  BoundaryEmbedding emb_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Point, RationalFunction, PointHash> cache_;
};

}  // namespace frieze_lab
