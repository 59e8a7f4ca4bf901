#include "frieze_lab/dtilde.hpp"

#include <string>

#include "frieze_lab/error.hpp"
#include "frieze_lab/frieze.hpp"
#include "frieze_lab/tiling.hpp"

namespace frieze_lab {

void Bounds::include(Point p) {
  if (empty) {
    c0 = c1 = p.col;
    r0 = r1 = p.row;
    empty = false;
    return;
  }
  c0 = std::min(c0, p.col);
  c1 = std::max(c1, p.col);
  r0 = std::min(r0, p.row);
  r1 = std::max(r1, p.row);
}

std::vector<RationalFunction> VariableCatalog::values() const {
  std::vector<RationalFunction> out;
  for (const auto& e : transjective) out.push_back(e.value);
  for (const auto& e : tubes) out.push_back(e.value);
  return out;
}

Straightening straighten(const DTildeQuiver& d) {
  Straightening st;
  Seed s = Seed::initial(d.quiver);
  if (d.fork1 == ForkKind::Mixed) st.mutated.push_back(1);
  if (d.fork2 == ForkKind::Mixed) st.mutated.push_back(d.n);
  for (Vertex v : st.mutated) s = s.mutate(v);
  st.quiver = st.mutated.empty() ? d : classify_d_tilde(s.quiver);
  for (Vertex v : st.mutated) st.back[Var(v)] = s.x.at(v);
  return st;
}

std::pair<RationalFunction, RationalFunction> split_extreme_value(const RationalFunction& v, ForkSide fork, int n) {
  const Vertex a = fork == ForkSide::Bottom ? 1 : n;
  const Vertex b = fork == ForkSide::Bottom ? 2 : n + 1;
  const RationalFunction ua = RationalFunction::var(Var(a)), ub = RationalFunction::var(Var(b));
  const RationalFunction w = v * ua * ub;
  RationalFunction root;
  try {
    root = RationalFunction(poly_sqrt(w.num()), poly_sqrt(w.den()));
  } catch (const Error&) {
    throw Error("extreme ray value is not a fork product");
  }
  return {root / ua, root / ub};
}

std::vector<TransjectiveEntry> transjective_variables(const DTildeQuiver& d, int k_min, int k_max, Bounds* window) {
  if (k_min > k_max) throw Error("empty k-range");
  const Straightening st = straighten(d);
  const DTildeQuiver& q = st.quiver;
  const int n = q.n;
  const Seed seed = Seed::initial(q.quiver);
  FriezeSession frieze(seed);
  const DTildeBoundary b = build_dtilde_boundary(q, seed.x);
  std::optional<TilingSession> tiling;
  if (k_max >= 0) tiling.emplace(b.word);

  std::vector<TransjectiveEntry> out;
  for (int k = k_min; k <= k_max; ++k) {
    for (std::size_t idx = 0; idx < b.root.labels.size(); ++idx) {
      const Vertex line = b.root.labels[idx];
      RationalFunction v;
      if (k >= 0) {
        Point o = tiling->embedding().coord(b.root.first + long(idx));
        Point p{o.col + k, o.row + k};
        if (window) window->include(p);
        v = tiling->tile_value(p);
        if (k <= 2 && !(v == modelled_value(frieze, n, k, line)))
          throw InternalError("diagonal ray and frieze disagree at k = " + std::to_string(k) + ", line " +
                              std::to_string(line));
      } else {
        v = modelled_value(frieze, n, k, line);
      }
      if (line == 1 || line == Vertex(n)) {
        auto [u, w] = split_extreme_value(v, line == 1 ? ForkSide::Bottom : ForkSide::Top, n);
        out.push_back({k, line, 1, st.pull_back(u)});
        out.push_back({k, line, 2, st.pull_back(w)});
      } else {
        out.push_back({k, line, 0, st.pull_back(v)});
      }
    }
  }
  return out;
}

TubeSpec big_tube_mouth(const DTildeQuiver& d, Bounds* window) {
  const Straightening st = straighten(d);
  const int n = st.quiver.n;
  const DTildeBoundary b = build_dtilde_boundary(st.quiver, Seed::initial(st.quiver.quiver).x);
  TilingSession t(b.word);
  const BoundaryEmbedding& e = t.embedding();

  // First column lying wholly to the right of the root's left end.
  long c = e.coord(b.root.first).col;
  while (e.first_in_col(c) - 1 < b.root.first) ++c;

  const int s = n - 2;
  std::vector<RationalFunction> coeffs;
  for (int j = 0; j < 2 * s; ++j) {
    const long col = c + j;
    coeffs.push_back(t.linearization_coefficient(col));
    if (window) {
      long row = e.coord(e.first_in_col(col - 1)).row;
      for (long cc : {col, col + 1}) row = std::max(row, e.coord(e.first_in_col(cc)).row);
      window->include({col - 1, e.coord(e.last_in_col(col - 1)).row});
      window->include({col + 1, row + 2});
    }
  }
  for (int j = 0; j < s; ++j)
    if (!(coeffs[j] == coeffs[j + s])) throw InternalError("column coefficients are not periodic with period n-2");

  TubeSpec tube{s, {}, "big"};
  for (int j = 0; j < s; ++j) tube.mouth.push_back(st.pull_back(coeffs[j]));
  return tube;
}

std::pair<TubeSpec, TubeSpec> rank2_tube_mouths(const DTildeQuiver& d) {
  const Straightening st = straighten(d);
  const int n = st.quiver.n;
  const Seed seed = Seed::initial(st.quiver.quiver);
  auto walk = [&](Vertex a, Vertex b) {
    return st.pull_back(walk_cluster_variable(seed, reduced_walk(seed.quiver, a, b)));
  };
  auto label = [](Vertex a, Vertex b, Vertex c, Vertex e) {
    return std::to_string(a) + "-" + std::to_string(b) + "," + std::to_string(c) + "-" + std::to_string(e);
  };
  const Vertex m = n, m1 = n + 1;
  TubeSpec a{2, {walk(1, m1), walk(2, m)}, label(1, m1, 2, m)};
  TubeSpec b{2, {walk(1, m), walk(2, m1)}, label(1, m, 2, m1)};
  return {std::move(a), std::move(b)};
}

RationalFunction tube_variable(const TubeSpec& tube, int i, int depth) {
  if (tube.rank <= 0 || int(tube.mouth.size()) != tube.rank) throw Error("tube mouth length differs from its rank");
  if (i < 1 || i > tube.rank) throw Error("mouth index out of range");
  if (depth < 1) throw Error("tube depth must be at least 1");
  std::vector<RationalFunction> run;
  for (int j = 0; j < depth; ++j) run.push_back(tube.mouth[(i - 1 + j) % tube.rank]);
  return continuant(run);
}

}  // namespace frieze_lab
