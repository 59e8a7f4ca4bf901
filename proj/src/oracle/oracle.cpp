#include "frieze_lab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <unordered_set>

#include "frieze_lab/error.hpp"

namespace frieze_lab {

std::optional<int> OracleResult::witness_depth(const RationalFunction& f) const {
  auto it = variables.find(f);
  if (it == variables.end()) return std::nullopt;
  return it->second;
}

unsigned default_threads() {
  if (const char* env = std::getenv("FRIEZE_LAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return unsigned(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int default_oracle_depth(int n) { return n <= 4 ? 9 : n == 5 ? 7 : 6; }

namespace {

struct Node {
  Seed seed;
  Vertex last = -1;  // mutating here again would undo the previous step
};

class Interner {
 public:
  // Registers f at the given depth (kept if already known) and returns its id.
  std::uint32_t id(const RationalFunction& f, int depth, OracleResult& out) {
    auto [it, fresh] = ids_.try_emplace(f, std::uint32_t(ids_.size()));
    if (fresh) out.variables.emplace(f, depth);
    return it->second;
  }

 private:
  std::unordered_map<RationalFunction, std::uint32_t, RationalFunctionHash> ids_;
};

std::string seed_key(const Seed& s, Interner& in, int depth, OracleResult& out) {
  std::string key;
  auto put = [&key](std::uint32_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
  for (const auto& [v, f] : s.x) put(in.id(f, depth, out));
  put(0xffffffffu);
  for (const auto& [a, m] : s.quiver.arrows()) {
    put(std::uint32_t(a.first));
    put(std::uint32_t(a.second));
    put(std::uint32_t(m));
  }
  return key;
}

}  // namespace

OracleResult enumerate_by_mutation(const Seed& s0, int depth, unsigned threads) {
  if (depth < 0) throw Error("oracle depth must be non-negative");
  if (threads == 0) threads = default_threads();
  OracleResult out;
  out.depth = depth;
  Interner in;
  std::unordered_set<std::string> visited;
  visited.insert(seed_key(s0, in, 0, out));
  std::vector<Node> frontier{{s0, -1}};
  const auto& verts = s0.quiver.vertices();

  for (int level = 1; level <= depth && !frontier.empty(); ++level) {
    // Children are computed in parallel and merged in frontier order, so the
    // result does not depend on scheduling.
    std::vector<std::vector<Node>> children(frontier.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next++) < frontier.size();) {
        for (Vertex v : verts)
          if (v != frontier[i].last) children[i].push_back({frontier[i].seed.mutate(v), v});
      }
    };
    std::vector<std::thread> pool;
    const unsigned n_threads = std::min<std::size_t>(threads, frontier.size());
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::vector<Node> next_frontier;
    for (auto& group : children)
      for (auto& c : group)
        if (visited.insert(seed_key(c.seed, in, level, out)).second) next_frontier.push_back(std::move(c));
    frontier = std::move(next_frontier);
  }
  out.seeds = visited.size();
  return out;
}

bool OracleReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.found; });
}

OracleReport verify_values(const std::vector<RationalFunction>& values, const OracleResult& oracle) {
  OracleReport r;
  for (const auto& v : values) {
    auto w = oracle.witness_depth(v);
    r.entries.push_back({v, w.has_value(), w});
  }
  return r;
}

OracleReport verify_catalog(const VariableCatalog& catalog, const OracleResult& oracle) {
  return verify_values(catalog.values(), oracle);
}

}  // namespace frieze_lab
