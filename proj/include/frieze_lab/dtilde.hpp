#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frieze_lab/boundary.hpp"
#include "frieze_lab/quiver.hpp"

namespace frieze_lab {

enum class ForkSide { Bottom, Top };

// One transjective variable. `line` is the spine vertex of the ray (1 and n
// are the fork lines); split fork values have part 1 (divided by u1, resp.
// un) and part 2 (divided by u2, resp. u(n+1)); other lines have part 0.
struct TransjectiveEntry {
  int k = 0;
  Vertex line = 0;
  int part = 0;
  RationalFunction value;
};

struct TubeSpec {
  int rank = 0;
  std::vector<RationalFunction> mouth;  // cyclic
  std::string label;                    // "big", or the walk endpoints
};

struct TubeEntry {
  int tube_rank = 0;
  std::string tube;
  int mouth_index = 0;  // 1-based
  int depth = 0;
  RationalFunction value;
};

struct Bounds {
  long c0 = 0, r0 = 0, c1 = 0, r1 = 0;
  void include(Point p);
  bool empty = true;
};

struct VariableCatalog {
  std::vector<TransjectiveEntry> transjective;
  std::vector<TubeEntry> tubes;

  DTildeQuiver quiver;
  std::string boundary;
  Bounds window;
  int k_min = 0, k_max = 0, tube_depth = 0;
  std::vector<Vertex> straightened;  // leaves mutated to remove mixed forks

  std::size_t size() const { return transjective.size() + tubes.size(); }
  std::vector<RationalFunction> values() const;
};

// A seed whose mixed forks were removed by mutating at leaf 1 and/or n,
// together with the substitution that expresses the fresh variables of the
// mutated seed in the original ones.
struct Straightening {
  DTildeQuiver quiver;
  std::vector<Vertex> mutated;
  std::map<Var, RationalFunction> back;

  RationalFunction pull_back(const RationalFunction& f) const { return mutated.empty() ? f : f.substitute(back); }
};
Straightening straighten(const DTildeQuiver& d);

// Values on diagonal rays of the f~0 tiling for k >= 0 and from the frieze
// for k < 0; fork lines are split. Mixed forks are straightened first.
std::vector<TransjectiveEntry> transjective_variables(const DTildeQuiver& d, int k_min, int k_max,
                                                      Bounds* window = nullptr);

// Throws Error "extreme ray value is not a fork product" when v times the
// two leaf variables is not a square.
std::pair<RationalFunction, RationalFunction> split_extreme_value(const RationalFunction& v, ForkSide fork, int n);

TubeSpec big_tube_mouth(const DTildeQuiver& d, Bounds* window = nullptr);
// Walks 1 -> n+1, 2 -> n and 1 -> n, 2 -> n+1.
std::pair<TubeSpec, TubeSpec> rank2_tube_mouths(const DTildeQuiver& d);
// Continuant of `depth` consecutive mouth variables from index i (1-based).
RationalFunction tube_variable(const TubeSpec& tube, int i, int depth);

// k_range empty means the initial cluster only. Tube entries are listed up
// to depth min(tube_depth, rank - 1). Throws InternalError when an entry is
// not a Laurent polynomial.
VariableCatalog all_variables(const DTildeQuiver& d, std::optional<std::pair<int, int>> k_range, int tube_depth);

}  // namespace frieze_lab
