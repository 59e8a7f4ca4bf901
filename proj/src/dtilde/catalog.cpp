#include <algorithm>
#include <future>
#include <unordered_set>

#include "frieze_lab/dtilde.hpp"
#include "frieze_lab/error.hpp"

namespace frieze_lab {

VariableCatalog all_variables(const DTildeQuiver& d, std::optional<std::pair<int, int>> k_range, int tube_depth) {
  if (tube_depth < 0) throw Error("tube depth must be non-negative");
  const auto [k_min, k_max] = k_range.value_or(std::pair{0, 0});
  if (k_min > k_max) throw Error("empty k-range");

  VariableCatalog cat;
  cat.quiver = d;
  cat.k_min = k_min;
  cat.k_max = k_max;
  cat.tube_depth = tube_depth;
  cat.straightened = straighten(d).mutated;
  cat.boundary = build_dtilde_boundary(d, Seed::initial(d.quiver).x).word.to_string();

  Bounds rays, columns;
  auto trans = std::async(std::launch::async, [&] { return transjective_variables(d, k_min, k_max, &rays); });
  std::vector<TubeSpec> tubes;
  if (tube_depth > 0) {
    auto big = std::async(std::launch::async, [&] { return big_tube_mouth(d, &columns); });
    auto [a, b] = rank2_tube_mouths(d);
    tubes = {big.get(), std::move(a), std::move(b)};
  }
  std::vector<TransjectiveEntry> trans_entries = trans.get();
  cat.window = rays;
  if (!columns.empty) {
    cat.window.include({columns.c0, columns.r0});
    cat.window.include({columns.c1, columns.r1});
  }

  std::unordered_set<RationalFunction, RationalFunctionHash> seen;
  auto admit = [&](const RationalFunction& v) {
    if (!v.is_laurent()) throw InternalError("catalog entry is not a Laurent polynomial: " + v.to_string());
    return seen.insert(v).second;
  };

  for (auto& e : trans_entries)
    if (admit(e.value)) cat.transjective.push_back(std::move(e));

  std::stable_sort(tubes.begin(), tubes.end(), [](const TubeSpec& x, const TubeSpec& y) { return x.rank > y.rank; });
  for (const TubeSpec& t : tubes) {
    const int max_depth = std::min(tube_depth, t.rank - 1);
    for (int i = 1; i <= t.rank; ++i)
      for (int dep = 1; dep <= max_depth; ++dep) {
        RationalFunction v = tube_variable(t, i, dep);
        if (admit(v)) cat.tubes.push_back({t.rank, t.label, i, dep, std::move(v)});
      }
  }
  return cat;
}

}  // namespace frieze_lab
