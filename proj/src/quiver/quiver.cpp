#include "frieze_lab/quiver.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "frieze_lab/error.hpp"

namespace frieze_lab {

Quiver::Quiver(std::vector<Vertex> vertices, const std::vector<Arrow>& arrows)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw Error("duplicate vertex");
  for (const auto& [s, t] : arrows) {
    if (!has_vertex(s) || !has_vertex(t))
      throw Error("arrow " + std::to_string(s) + "->" + std::to_string(t) + " uses an unknown vertex");
    if (s == t) throw Error("loop at vertex " + std::to_string(s));
    ++arrows_[{s, t}];
  }
  for (const auto& [a, m] : arrows_)
    if (arrows_.count({a.second, a.first}))
      throw Error("2-cycle between " + std::to_string(a.first) + " and " + std::to_string(a.second));
}

bool Quiver::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Quiver::arrow_count(Vertex s, Vertex t) const {
  auto it = arrows_.find({s, t});
  return it == arrows_.end() ? 0 : it->second;
}

std::vector<Arrow> Quiver::arrow_list() const {
  std::vector<Arrow> out;
  for (const auto& [a, m] : arrows_)
    for (int i = 0; i < m; ++i) out.push_back(a);
  return out;
}

std::size_t Quiver::num_arrows() const {
  std::size_t n = 0;
  for (const auto& [a, m] : arrows_) n += m;
  return n;
}

std::vector<Vertex> Quiver::successors(Vertex v) const {
  std::vector<Vertex> out;
  for (const auto& [a, m] : arrows_)
    if (a.first == v) out.insert(out.end(), m, a.second);
  return out;
}

std::vector<Vertex> Quiver::predecessors(Vertex v) const {
  std::vector<Vertex> out;
  for (const auto& [a, m] : arrows_)
    if (a.second == v) out.insert(out.end(), m, a.first);
  return out;
}

Quiver Quiver::mutate(Vertex k) const {
  if (!has_vertex(k)) throw Error("mutation at unknown vertex " + std::to_string(k));
  std::map<Arrow, int> next;
  for (const auto& [a, m] : arrows_) {
    if (a.first == k || a.second == k)
      next[{a.second, a.first}] += m;
    else
      next[a] += m;
  }
  for (const auto& [in, mi] : arrows_) {
    if (in.second != k) continue;
    for (const auto& [out, mo] : arrows_)
      if (out.first == k) next[{in.first, out.second}] += mi * mo;
  }
  // Cancel 2-cycles.
  for (auto& [a, m] : next) {
    auto rev = next.find({a.second, a.first});
    if (rev == next.end()) continue;
    int c = std::min(m, rev->second);
    m -= c;
    rev->second -= c;
  }
  std::erase_if(next, [](const auto& e) { return e.second == 0; });
  Quiver q;
  q.vertices_ = vertices_;
  q.arrows_ = std::move(next);
  return q;
}

std::vector<Vertex> Quiver::topological_order() const {
  std::map<Vertex, int> indeg;
  for (Vertex v : vertices_) indeg[v] = 0;
  for (const auto& [a, m] : arrows_) indeg[a.second] += m;
  std::vector<Vertex> order;
  std::set<Vertex> ready;
  for (const auto& [v, d] : indeg)
    if (d == 0) ready.insert(v);
  while (!ready.empty()) {
    Vertex v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (Vertex w : successors(v))
      if (--indeg[w] == 0) ready.insert(w);
  }
  if (order.size() != vertices_.size()) throw Error("quiver has an oriented cycle");
  return order;
}

Seed Seed::initial(const Quiver& q) {
  Seed s{q, {}};
  for (Vertex v : q.vertices()) {
    if (v < 0) throw Error("initial seed needs nonnegative vertex labels");
    s.x.emplace(v, RationalFunction::var(Var(v)));
  }
  return s;
}

RationalFunction exchange(const Seed& s, Vertex k) {
  RationalFunction in = 1, out = 1;
  for (Vertex j : s.quiver.predecessors(k)) in *= s.x.at(j);
  for (Vertex j : s.quiver.successors(k)) out *= s.x.at(j);
  return (in + out) / s.x.at(k);
}

Seed Seed::mutate(Vertex k) const {
  Seed next{quiver.mutate(k), x};
  next.x[k] = exchange(*this, k);
  return next;
}

std::vector<Vertex> DTildeQuiver::spine() const {
  std::vector<Vertex> s{1};
  for (Vertex v = 3; v <= n - 1; ++v) s.push_back(v);
  s.push_back(n);
  return s;
}

namespace {

ForkKind fork_kind(bool a_in, bool b_in) {
  if (a_in && b_in) return ForkKind::BothIn;
  if (!a_in && !b_in) return ForkKind::BothOut;
  return ForkKind::Mixed;
}

}  // namespace

DTildeQuiver build_d_tilde(int n, const DTildeOrientation& o) {
  if (n < 4) throw Error("D~n needs n >= 4");
  std::vector<bool> chain = o.chain_forward;
  if (chain.empty()) chain.assign(n - 4, true);
  if (int(chain.size()) != n - 4)
    throw Error("chain orientation must cover the " + std::to_string(n - 4) + " chain arrows");
  const Vertex j1 = 3, j2 = n - 1;
  auto arrow = [](bool in, Vertex leaf, Vertex joint) { return in ? Arrow{leaf, joint} : Arrow{joint, leaf}; };
  std::vector<Arrow> arrows{arrow(o.arrow1_in, 1, j1), arrow(o.arrow2_in, 2, j1),
                            arrow(o.arrown_in, n, j2), arrow(o.arrown1_in, n + 1, j2)};
  for (int i = 3; i <= n - 2; ++i)
    arrows.push_back(chain[i - 3] ? Arrow{i, i + 1} : Arrow{i + 1, i});
  std::vector<Vertex> vs;
  for (int v = 1; v <= n + 1; ++v) vs.push_back(v);
  return {n, Quiver(vs, arrows), fork_kind(o.arrow1_in, o.arrow2_in), fork_kind(o.arrown_in, o.arrown1_in)};
}

DTildeQuiver classify_d_tilde(const Quiver& q) {
  const int n = int(q.vertices().size()) - 1;
  auto bad = [] { throw Error("quiver is not D~n in the standard labelling"); };
  if (n < 4) bad();
  for (int v = 1; v <= n + 1; ++v)
    if (!q.has_vertex(v)) bad();
  if (q.num_arrows() != std::size_t(n)) bad();
  DTildeOrientation o;
  auto dir = [&](Vertex a, Vertex b) {
    if (q.arrow_count(a, b) == 1) return true;
    if (q.arrow_count(b, a) == 1) return false;
    bad();
    return false;
  };
  o.arrow1_in = dir(1, 3);
  o.arrow2_in = dir(2, 3);
  o.arrown_in = dir(n, n - 1);
  o.arrown1_in = dir(n + 1, n - 1);
  for (int i = 3; i <= n - 2; ++i) o.chain_forward.push_back(dir(i, i + 1));
  return build_d_tilde(n, o);
}

std::vector<Vertex> Walk::vertices() const {
  std::vector<Vertex> vs{start};
  for (const auto& s : steps) vs.push_back(s.to());
  return vs;
}

Walk reduced_walk(const Quiver& q, Vertex from, Vertex to) {
  if (!q.has_vertex(from) || !q.has_vertex(to)) throw Error("walk endpoint is not a vertex");
  std::map<Vertex, WalkStep> via;
  std::queue<Vertex> todo;
  todo.push(from);
  std::set<Vertex> seen{from};
  while (!todo.empty()) {
    Vertex v = todo.front();
    todo.pop();
    for (const auto& [a, m] : q.arrows()) {
      if (a.first != v && a.second != v) continue;
      if (m != 1) throw Error("walk crosses a multiple arrow");
      WalkStep step{a, a.first == v};
      if (!seen.insert(step.to()).second) continue;
      via.emplace(step.to(), step);
      todo.push(step.to());
    }
  }
  if (!seen.count(to)) throw Error("no walk between the vertices");
  Walk w{from, {}};
  for (Vertex v = to; v != from; v = via.at(v).from()) w.steps.push_back(via.at(v));
  std::reverse(w.steps.begin(), w.steps.end());
  return w;
}

}  // namespace frieze_lab
