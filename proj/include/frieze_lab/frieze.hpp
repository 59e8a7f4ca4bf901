#pragma once

#include <map>
#include <mutex>

#include "frieze_lab/quiver.hpp"

namespace frieze_lab {

// Frieze a(k, i) on ZQ for an acyclic seed: a(0, i) = x_i and
// a(k, i) a(k+1, i) = 1 + prod_{i->j} a(k, j) * prod_{j->i} a(k+1, j).
// Slices are knitted forward or backward on demand and cached.
class FriezeSession {
 public:
  // Throws Error when the quiver has an oriented cycle.
  explicit FriezeSession(Seed seed);

  const Seed& seed() const { return seed_; }
  RationalFunction value(int k, Vertex i) const;
  std::map<Vertex, RationalFunction> slice(int k) const;

 private:
  const std::map<Vertex, RationalFunction>& slice_locked(int k) const;

  Seed seed_;
  std::vector<Vertex> order_;
  mutable std::mutex mu_;
  mutable std::map<int, std::map<Vertex, RationalFunction>> slices_;
};

// Line of the modelled frieze, named by its spine vertex: 1 is the glued
// bottom fork a(k,1) a(k,2), n the glued top fork a(k,n) a(k,n+1), and
// 3..n-1 the interior lines.
RationalFunction modelled_value(const FriezeSession& s, int n, int k, Vertex line);

}  // namespace frieze_lab
