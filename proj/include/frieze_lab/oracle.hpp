#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "frieze_lab/dtilde.hpp"

namespace frieze_lab {

// Variables reached by breadth-first mutation, each with the length of the
// shortest mutation sequence producing it.
struct OracleResult {
  std::unordered_map<RationalFunction, int, RationalFunctionHash> variables;
  std::size_t seeds = 0;  // distinct labelled seeds visited
  int depth = 0;

  bool contains(const RationalFunction& f) const { return variables.count(f) != 0; }
  std::optional<int> witness_depth(const RationalFunction& f) const;
};

// FRIEZE_LAB_THREADS when set and positive, else the hardware concurrency.
unsigned default_threads();
// 9 for n = 4, 7 for n = 5, 6 beyond.
int default_oracle_depth(int n);

// Seeds are identified by their per-vertex variables and labelled arrows.
// threads == 0 means default_threads().
OracleResult enumerate_by_mutation(const Seed& s0, int depth, unsigned threads = 0);

struct ReportEntry {
  RationalFunction value;
  bool found = false;
  std::optional<int> witness_depth;
};

struct OracleReport {
  std::vector<ReportEntry> entries;
  bool pass() const;
};

OracleReport verify_values(const std::vector<RationalFunction>& values, const OracleResult& oracle);
OracleReport verify_catalog(const VariableCatalog& catalog, const OracleResult& oracle);

}  // namespace frieze_lab
