#include <string>

#include "frieze_lab/boundary.hpp"
#include "frieze_lab/error.hpp"

namespace frieze_lab {

DTildeBoundary build_dtilde_boundary(const DTildeQuiver& d, const std::map<Vertex, RationalFunction>& x,
                                     bool keep_u0) {
  if (d.fork1 == ForkKind::Mixed || d.fork2 == ForkKind::Mixed) {
    // A mixed fork is straightened by mutating at its leaf 1 (or n); the
    // spine endpoint then carries x2 (1 + x3) / x1 (or the mirror value).
    Seed s{d.quiver, x};
    if (d.fork1 == ForkKind::Mixed) s = s.mutate(1);
    if (d.fork2 == ForkKind::Mixed) s = s.mutate(d.n);
    return build_dtilde_boundary(classify_d_tilde(s.quiver), s.x, keep_u0);
  }
  const int n = d.n;
  const std::vector<Vertex> spine = d.spine();
  const int s = int(spine.size());  // n - 1

  std::vector<RationalFunction> value(s);
  for (int p = 0; p < s; ++p) {
    Vertex v = spine[p];
    if (v == 1)
      value[p] = x.at(1) * x.at(2);
    else if (v == n)
      value[p] = x.at(n) * x.at(n + 1);
    else
      value[p] = x.at(v);
  }
  // Spine vertex 1 stands for its fork; the letter follows arrow 1 - 3.
  auto forward = [&](int p) {
    Vertex a = spine[p], b = spine[p + 1];
    return d.quiver.arrow_count(a, b) > 0;
  };

  // The doubled cycle: top copy of the spine left to right, right auxiliary
  // vertex, bottom copy right to left, left auxiliary vertex.
  const Vertex o_right = s, o_left = 2 * s + 1;
  auto top = [](int p) { return Vertex(p); };
  auto bottom = [&](int p) { return Vertex(s + 1 + (s - 1 - p)); };
  std::vector<Vertex> ids;
  for (Vertex v = 0; v <= o_left; ++v) ids.push_back(v);
  std::vector<Arrow> arrows;
  for (int p = 0; p + 1 < s; ++p) {
    bool f = forward(p);
    arrows.push_back(f ? Arrow{top(p), top(p + 1)} : Arrow{top(p + 1), top(p)});
    arrows.push_back(f ? Arrow{bottom(p), bottom(p + 1)} : Arrow{bottom(p + 1), bottom(p)});
  }
  arrows.push_back({top(s - 1), o_right});
  arrows.push_back({o_right, bottom(s - 1)});
  arrows.push_back({bottom(0), o_left});
  arrows.push_back({o_left, top(0)});
  Quiver cycle(ids, arrows);

  const RationalFunction aux = keep_u0 ? RationalFunction::var(0) : RationalFunction(1);
  auto value_of = [&](Vertex id) -> RationalFunction {
    if (id == o_left || id == o_right) return aux;
    if (id < s) return value[id];
    return value[s - 1 - (id - s - 1)];
  };
  auto to_generator = [&](const CutReading& r) {
    Generator g;
    g.letters = r.letters;
    for (std::size_t k = 0; k + 1 < r.vertices.size(); ++k) g.values.push_back(value_of(r.vertices[k]));
    return g;
  };

  Generator left = to_generator(generator_from_a_tilde(cycle, top(0), true));
  Generator right = to_generator(generator_from_a_tilde(cycle, bottom(s - 1), false));
  FiniteWord root;
  root.values = value;
  for (int p = 0; p + 1 < s; ++p) root.letters.push_back(forward(p) ? Letter::X : Letter::Y);

  DTildeBoundary out{BoundaryWord::bi_generated(std::move(left), std::move(root), std::move(right)),
                     RootSpan{0, s - 1, spine}};
  return out;
}

}  // namespace frieze_lab
