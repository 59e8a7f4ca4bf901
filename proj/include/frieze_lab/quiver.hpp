#pragma once

#include <map>
#include <utility>
#include <vector>

#include "frieze_lab/exactalg/rational_function.hpp"

namespace frieze_lab {

using Vertex = int;
using Arrow = std::pair<Vertex, Vertex>;

// Finite quiver without loops or 2-cycles; parallel arrows are counted.
class Quiver {
 public:
  Quiver() = default;
  // Throws Error on loops, 2-cycles, duplicate vertices or unknown endpoints.
  Quiver(std::vector<Vertex> vertices, const std::vector<Arrow>& arrows);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool has_vertex(Vertex v) const;
  int arrow_count(Vertex s, Vertex t) const;
  const std::map<Arrow, int>& arrows() const { return arrows_; }
  std::vector<Arrow> arrow_list() const;
  std::size_t num_arrows() const;

  // Endpoints of arrows leaving / entering v, repeated by multiplicity.
  std::vector<Vertex> successors(Vertex v) const;
  std::vector<Vertex> predecessors(Vertex v) const;

  Quiver mutate(Vertex k) const;
  // Throws Error when the quiver has an oriented cycle.
  std::vector<Vertex> topological_order() const;

  bool operator==(const Quiver& rhs) const = default;

 private:
  std::vector<Vertex> vertices_;
  std::map<Arrow, int> arrows_;
};

// Quiver together with one cluster variable per vertex.
struct Seed {
  Quiver quiver;
  std::map<Vertex, RationalFunction> x;

  // x_v = u_v for every vertex v.
  static Seed initial(const Quiver& q);
  Seed mutate(Vertex k) const;
};

// Exchange relation at k: (prod over in-arrows + prod over out-arrows) / x_k.
RationalFunction exchange(const Seed& s, Vertex k);

enum class ForkKind { BothIn, BothOut, Mixed };

// Directions of the arrows of D~n, labelled as: 1, 2 attached to 3;
// chain 3 - 4 - ... - (n-1); n, n+1 attached to n-1. For n = 4 both forks
// share the joint 3.
struct DTildeOrientation {
  bool arrow1_in = true;   // 1 -> 3, otherwise 3 -> 1
  bool arrow2_in = true;   // 2 -> 3
  bool arrown_in = true;   // n -> n-1
  bool arrown1_in = true;  // n+1 -> n-1
  std::vector<bool> chain_forward;  // i -> i+1 for i = 3..n-2; empty means all forward

  static DTildeOrientation all_in() { return {}; }
  static DTildeOrientation all_out() { return {false, false, false, false, {}}; }
  // Fork 1 both-in, fork 2 both-out.
  static DTildeOrientation canonical() { return {true, true, false, false, {}}; }
};

struct DTildeQuiver {
  int n = 0;
  Quiver quiver;
  ForkKind fork1 = ForkKind::BothIn;  // vertices 1, 2 around joint 3
  ForkKind fork2 = ForkKind::BothIn;  // vertices n, n+1 around joint n-1

  Vertex joint1() const { return 3; }
  Vertex joint2() const { return n - 1; }
  // Spine vertices 1, 3, ..., n-1, n used by the folded path.
  std::vector<Vertex> spine() const;
};

// Throws Error for n < 4 or a chain orientation of the wrong length.
DTildeQuiver build_d_tilde(int n, const DTildeOrientation& orientation);
// Recognises a quiver on 1..n+1 whose underlying graph is D~n in the
// standard labelling; throws Error otherwise.
DTildeQuiver classify_d_tilde(const Quiver& q);

struct WalkStep {
  Arrow arrow;   // the arrow's own source and target
  bool forward;  // traversed source -> target
  Vertex from() const { return forward ? arrow.first : arrow.second; }
  Vertex to() const { return forward ? arrow.second : arrow.first; }
};

struct Walk {
  Vertex start = 0;
  std::vector<WalkStep> steps;

  std::vector<Vertex> vertices() const;
  Vertex end() const { return steps.empty() ? start : steps.back().to(); }
};

// Shortest walk between two vertices (the unique reduced one when the
// quiver is a tree); throws Error when the vertices are not connected.
Walk reduced_walk(const Quiver& q, Vertex from, Vertex to);

// String-module cluster variable of a reduced walk, by the 2x2 matrix
// product formula evaluated in the seed's variables.
RationalFunction walk_cluster_variable(const Seed& seed, const Walk& walk);

}  // namespace frieze_lab
