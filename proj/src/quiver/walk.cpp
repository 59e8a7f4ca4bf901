#include <string>

#include "frieze_lab/error.hpp"
#include "frieze_lab/quiver.hpp"

namespace frieze_lab {

namespace {

struct Row {
  RationalFunction a, b;

  // (a, b) * [[p, q], [r, s]]
  Row times(const RationalFunction& p, const RationalFunction& q, const RationalFunction& r,
            const RationalFunction& s) const {
    return {a * p + b * r, a * q + b * s};
  }
};

}  // namespace

RationalFunction walk_cluster_variable(const Seed& seed, const Walk& walk) {
  const Quiver& q = seed.quiver;
  if (!q.has_vertex(walk.start)) throw Error("walk starts outside the quiver");
  Vertex at = walk.start;
  for (std::size_t k = 0; k < walk.steps.size(); ++k) {
    const WalkStep& st = walk.steps[k];
    if (q.arrow_count(st.arrow.first, st.arrow.second) == 0) throw Error("walk uses a missing arrow");
    if (st.from() != at) throw Error("walk steps are not consecutive");
    if (k > 0 && walk.steps[k - 1].arrow == st.arrow) throw Error("walk is not reduced");
    at = st.to();
  }

  const std::vector<Vertex> vs = walk.vertices();
  auto x = [&](Vertex v) -> const RationalFunction& { return seed.x.at(v); };
  // diag(prod x_t over out-arrows, prod x_s over in-arrows) at the k-th
  // vertex, skipping one copy of each arrow the walk uses there.
  auto side = [&](std::size_t k) {
    std::map<Arrow, int> skip;
    if (k < walk.steps.size()) ++skip[walk.steps[k].arrow];
    if (k > 0) ++skip[walk.steps[k - 1].arrow];
    const Vertex v = vs[k];
    RationalFunction top = 1, bottom = 1;
    for (const auto& [a, m] : q.arrows()) {
      if (a.first != v && a.second != v) continue;
      int left = m - (skip.count(a) ? skip[a] : 0);
      for (int i = 0; i < left; ++i) {
        if (a.first == v)
          top *= x(a.second);
        else
          bottom *= x(a.first);
      }
    }
    return std::pair{top, bottom};
  };

  auto [t0, b0] = side(0);
  Row row{t0, b0};
  for (std::size_t k = 0; k < walk.steps.size(); ++k) {
    const WalkStep& st = walk.steps[k];
    const RationalFunction& xs = x(st.arrow.first);
    const RationalFunction& xt = x(st.arrow.second);
    row = st.forward ? row.times(xt, 0, 1, xs) : row.times(xt, 1, 0, xs);
    auto [top, bottom] = side(k + 1);
    row = {row.a * top, row.b * bottom};
  }
  RationalFunction denom = 1;
  for (Vertex v : vs) denom *= x(v);
  return (row.a + row.b) / denom;
}

}  // namespace frieze_lab
