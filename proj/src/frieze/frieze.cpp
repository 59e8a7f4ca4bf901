#include "frieze_lab/frieze.hpp"

#include <string>

#include "frieze_lab/error.hpp"

namespace frieze_lab {

FriezeSession::FriezeSession(Seed seed) : seed_(std::move(seed)), order_(seed_.quiver.topological_order()) {
  slices_[0] = seed_.x;
}

const std::map<Vertex, RationalFunction>& FriezeSession::slice_locked(int k) const {
  const Quiver& q = seed_.quiver;
  while (slices_.rbegin()->first < k) {
    const int from = slices_.rbegin()->first;
    const auto& cur = slices_.at(from);
    std::map<Vertex, RationalFunction> next;
    for (Vertex i : order_) {
      RationalFunction prod = 1;
      for (Vertex j : q.successors(i)) prod *= cur.at(j);
      for (Vertex j : q.predecessors(i)) prod *= next.at(j);
      next[i] = (RationalFunction(1) + prod) / cur.at(i);
    }
    slices_[from + 1] = std::move(next);
  }
  while (slices_.begin()->first > k) {
    const int from = slices_.begin()->first;
    const auto& cur = slices_.at(from);
    std::map<Vertex, RationalFunction> prev;
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const Vertex i = *it;
      RationalFunction prod = 1;
      for (Vertex j : q.successors(i)) prod *= prev.at(j);
      for (Vertex j : q.predecessors(i)) prod *= cur.at(j);
      prev[i] = (RationalFunction(1) + prod) / cur.at(i);
    }
    slices_[from - 1] = std::move(prev);
  }
  return slices_.at(k);
}

std::map<Vertex, RationalFunction> FriezeSession::slice(int k) const {
  std::lock_guard lock(mu_);
  return slice_locked(k);
}

RationalFunction FriezeSession::value(int k, Vertex i) const {
  std::lock_guard lock(mu_);
  const auto& s = slice_locked(k);
  auto it = s.find(i);
  if (it == s.end()) throw Error("vertex " + std::to_string(i) + " is not in the frieze");
  return it->second;
}

RationalFunction modelled_value(const FriezeSession& s, int n, int k, Vertex line) {
  if (line == 1) return s.value(k, 1) * s.value(k, 2);
  if (line == n) return s.value(k, n) * s.value(k, n + 1);
  if (line >= 3 && line <= n - 1) return s.value(k, line);
  throw Error("no modelled line " + std::to_string(line));
}

}  // namespace frieze_lab
