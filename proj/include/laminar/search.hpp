#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "laminar/bounds.hpp"
#include "laminar/family.hpp"

namespace laminar {

/// Vertices are blocks of [n]; A ~ B iff |A n B| < t or they are nested.
/// Cliques are exactly the t-laminar families among the vertices.
struct CompatGraph {
  std::size_t n = 0;
  int t = 1;
  std::vector<Block> vertices;
  std::vector<std::vector<std::uint64_t>> adjacency;

  bool adjacent(std::size_t i, std::size_t j) const {
    return (adjacency[i][j / 64] >> (j % 64)) & 1U;
  }
};

/// All blocks of [n] with min_size <= |B| <= n, canonical order.
CompatGraph build_compat_graph(std::size_t n, int t, std::size_t min_size);

struct CliqueResult {
  std::vector<std::size_t> members;
  bool exact = true;
  std::uint64_t nodes = 0;
};

/// Branch and bound with greedy-colouring bounds over bitsets. Stops once
/// `budget_seconds` elapse and reports the best clique seen as inexact.
CliqueResult max_clique(const CompatGraph& graph, double budget_seconds);

enum class SizeConvention {
  /// Members of size >= max(t, 2), universe included: the f(n) count.
  f_convention,
  /// Members of size >= t.
  at_least_t,
};

struct SearchOptions {
  double budget_seconds = 60.0;
  SizeConvention convention = SizeConvention::f_convention;
};

struct SearchResult {
  std::size_t size = 0;
  Family witness;
  /// False when the budget ran out; size is then only a lower bound.
  bool exact = true;
  std::uint64_t nodes = 0;
};

/// Largest t-laminar family on [n] under the chosen counting convention.
/// Exact within seconds for n <= 9.
SearchResult max_laminar_exact(std::size_t n, int t, const SearchOptions& options = {});

/// Largest laminar family of nonempty subsets of [n] (2n - 1 expected).
std::size_t max_laminar_classic(std::size_t n, double budget_seconds = 60.0);

struct GapReport {
  std::size_t n = 0;
  int t = 2;
  BigInt construction;
  std::size_t search = 0;
  bool search_exact = true;
  std::optional<Rat> obf;
  /// construction <= search, and search <= obf when the bound is known.
  bool holds = false;
};

GapReport verify_gap(std::size_t n, int t, const BigInt& construction, const SearchResult& search,
                     const BoundTable* table);

}  // namespace laminar
