#include "frieze_lab/tiling.hpp"

#include <mutex>
#include <random>

#include "frieze_lab/error.hpp"

namespace frieze_lab {

TilingSession::TilingSession(BoundaryWord word) : emb_(std::move(word)) {}

RationalFunction TilingSession::tile_value(Point p) const {
  {
    std::shared_lock lock(mu_);
    if (auto it = cache_.find(p); it != cache_.end()) return it->second;
  }
  RationalFunction v;
  switch (emb_.side(p)) {
    case BoundaryEmbedding::Side::Above:
      throw Error("point (" + std::to_string(p.col) + ", " + std::to_string(p.row) + ") is above the boundary");
    case BoundaryEmbedding::Side::On:
      v = emb_.word().value(*emb_.vertex_at(p));
      break;
    case BoundaryEmbedding::Side::Below:
      v = point_word_value(emb_.word_at_point(p));
      break;
  }
  std::unique_lock lock(mu_);
  cache_.emplace(p, v);
  return v;
}

std::vector<RationalFunction> TilingSession::ray_values(Point origin, Point step, int count) const {
  std::vector<RationalFunction> out;
  for (int k = 0; k < count; ++k) out.push_back(tile_value({origin.col + k * step.col, origin.row + k * step.row}));
  return out;
}

RationalFunction TilingSession::block_determinant(Point p) const {
  return tile_value(p) * tile_value({p.col + 1, p.row + 1}) -
         tile_value({p.col + 1, p.row}) * tile_value({p.col, p.row + 1});
}

Window TilingSession::window(long c0, long r0, long c1, long r1) const {
  if (c1 < c0 || r1 < r0) throw Error("empty window");
  const long width = c1 - c0 + 1, height = r1 - r0 + 1;
  Window w(height, std::vector<std::optional<RationalFunction>>(width));
  std::vector<Point> derived;
  for (long r = 0; r < height; ++r) {
    for (long c = 0; c < width; ++c) {
      Point p{c0 + c, r0 + r};
      auto side = emb_.side(p);
      if (side == BoundaryEmbedding::Side::Above) continue;
      if (side == BoundaryEmbedding::Side::Below && r > 0 && c > 0 && w[r - 1][c - 1] && w[r - 1][c] &&
          w[r][c - 1] && !w[r - 1][c - 1]->is_zero()) {
        w[r][c] = (RationalFunction(1) + *w[r - 1][c] * *w[r][c - 1]) / *w[r - 1][c - 1];
        derived.push_back(p);
      } else {
        w[r][c] = tile_value(p);
      }
    }
  }
  // Deterministic sample of the recurrence-filled cells.
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> pick(0, 19);
  for (std::size_t i = 0; i < derived.size(); ++i) {
    if (i != 0 && pick(rng) != 0) continue;
    Point p = derived[i];
    if (!(tile_value(p) == *w[p.row - r0][p.col - c0]))
      throw InternalError("window recurrence disagrees with the direct tile value");
  }
  return w;
}

RationalFunction TilingSession::continuant_via_word(long c_first, long c_last) const {
  return column_word_value(emb_.word_for_columns(c_first, c_last));
}

RationalFunction TilingSession::linearization_coefficient(long col) const {
  long row = emb_.coord(emb_.first_in_col(col - 1)).row;
  for (long c : {col, col + 1}) row = std::max(row, emb_.coord(emb_.first_in_col(c)).row);
  auto at_row = [&](long r) {
    RationalFunction mid = tile_value({col, r});
    if (mid.is_zero()) throw Error("linearization coefficient: zero middle value");
    return (tile_value({col - 1, r}) + tile_value({col + 1, r})) / mid;
  };
  RationalFunction alpha = at_row(row + 1);
  if (!(at_row(row + 2) == alpha)) throw InternalError("column coefficient differs between rows");
  if (!(continuant_via_word(col, col) == alpha))
    throw InternalError("column coefficient differs from the column word product");
  return alpha;
}

}  // namespace frieze_lab
