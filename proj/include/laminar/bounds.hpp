#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laminar/rational.hpp"

namespace laminar {

struct Point {
  Rat x;
  Rat y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// The constraint a*x + b*y >= c. Index k >= 2 carries a = C(k-1,2),
/// b = C(k,2), c = obf(k); index 1 is x >= 0.
struct Halfspace {
  int k = 1;
  BigInt a;
  BigInt b;
  Rat c;

  static Halfspace nonnegative_x();
  static Halfspace for_index(int k, const Rat& obf_k);

  Rat lhs(const Point& p) const { return a * p.x + b * p.y; }
  bool contains(const Point& p) const { return lhs(p) >= c; }
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Intersection point of the boundary lines of two halfspaces; throws
/// std::domain_error for parallel boundaries.
Point boundary_intersection(const Halfspace& h1, const Halfspace& h2);

/// Feasible region of the two-variable dual after stage n: the intersection
/// of all halfspaces with index <= n.
///
/// `critical` keeps only the irredundant halfspaces, by increasing index.
/// For k >= 2 the boundary slope -(k-2)/k steepens with k, so the lower-left
/// boundary chain runs y = 1, then the retained lines in index order, then the
/// y axis. `vertices` lists the corners along that chain, so x decreases.
struct Frontier {
  int n = 2;
  std::vector<Halfspace> critical;
  std::vector<Point> vertices;

  /// The stage-2 region {x >= 0, y >= 1} (obf(2) = 1).
  static Frontier initial();
  std::vector<int> critical_indices() const;
  friend bool operator==(const Frontier&, const Frontier&) = default;
};

/// Adds the halfspace for index frontier.n + 1. When every vertex already
/// satisfies it (tight counts as satisfied) the halfspace is dropped and only
/// the stage advances; otherwise it is inserted, the now-redundant critical
/// halfspaces are removed and the vertex chain recomputed. Returns whether
/// the critical set changed.
bool frontier_update_in_place(Frontier& frontier, int k_new, const Rat& obf_k);
Frontier frontier_update(const Frontier& frontier, int k_new, const Rat& obf_k);

struct FrontierChange {
  int n = 0;
  std::vector<int> critical;
  friend bool operator==(const FrontierChange&, const FrontierChange&) = default;
};

/// obf(k) for 2 <= k <= max_n(), the frontier history, and the maximizing m
/// for each n.
class BoundTable {
 public:
  BoundTable();

  int max_n() const { return static_cast<int>(values_.size()) - 1; }
  const Rat& obf(int n) const;
  /// Smallest maximizing m for obf(n); 0 for the base values n = 2, 3.
  int argmax(int n) const;
  const Frontier& frontier() const { return current_; }
  /// The region after stage m, taken from the last change at or before m
  /// (its `n` field is the stage of that change).
  const Frontier& frontier_at(int m) const;
  const std::vector<FrontierChange>& frontier_log() const { return log_; }

  /// Records obf(max_n() + 1) and advances the frontier.
  void append(const Rat& value, int argmax);

 private:
  std::vector<Rat> values_;
  std::vector<int> argmax_;
  Frontier current_;
  std::vector<Frontier> snapshots_;
  std::vector<int> snapshot_n_;
  std::vector<FrontierChange> log_;
};

/// LP(n, m) through the dual: obf(m) plus the minimum of
/// C(n-m,2) x + (C(n,2) - C(m,2)) y over the vertices of theta_m. The obf(m)
/// term accounts for the mandatory block of size m.
Rat lp_dual_value(int n, int m, const Frontier& theta_m, const BoundTable& table);
Rat lp_dual_value(int n, int m, const BoundTable& table);

struct PrimalSolution {
  Rat value;
  /// (k, b_k) for the nonzero block multiplicities; b_m includes the forced 1.
  std::vector<std::pair<int, Rat>> profile;
};

/// LP(n, m) through the primal, by enumerating every basic solution of the
/// two-constraint program in the shifted variables b_m = 1 + b'_m.
PrimalSolution lp_primal_oracle(int n, int m, const BoundTable& table);

struct ObfOptions {
  /// Rank m by a double-precision pass, then evaluate exactly every candidate
  /// among the top `prefilter_top` or within rounding distance of the best.
  bool prefilter = true;
  std::size_t prefilter_top = 32;
  int progress_every = 1000;
  std::function<void(int n, const BoundTable&)> progress;
};

/// Fills obf up to N (N >= 2).
BoundTable obf_table(int N, const ObfOptions& options = {});
/// Continues a table to N; no-op when already there.
void extend_table(BoundTable& table, int N, const ObfOptions& options = {});
/// obf(n) from scratch given obf(k) for k < n (table.max_n() >= n - 1).
std::pair<Rat, int> obf_value(int n, const BoundTable& table, const ObfOptions& options);

/// sum_{k > N} 1 / C(k, 2) = 2 / N.
Rat tail_sum(int N);

struct UpperLimit {
  int N = 0;
  Rat obf_N;
  Rat ratio;  // obf(N) / C(N,2)
  Rat tail;
  Rat upper;  // ratio + tail
};
UpperLimit upper_limit_report(const BoundTable& table, int N);

/// 3, 7, 43, 1807, ... (k -> k^2 - k + 1).
std::vector<BigInt> projective_indices(int terms);
/// 1 + sum over the first `terms` projective indices k of 1 / C(k, 2).
Rat projective_series(int terms);

/// obf(n)/C(n,2) <= 1/C(n,2) + max_{2<=k<n} obf(k)/C(k,2).
bool rec_bound_check(const BoundTable& table, int n);

// --- persistence -------------------------------------------------------------

class CacheError : public std::runtime_error {
 public:
  CacheError(std::size_t line, std::string expected, std::string found);
  std::size_t line() const { return line_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t line_;
  std::string expected_;
  std::string found_;
};

/// One line per n: "n<TAB>p/q". Only lines beyond those already present are
/// appended; existing lines are never rewritten.
void save_cache(const BoundTable& table, const std::string& path);
/// Verifies the base values, contiguity, the 2*C(n,2) ceiling, monotonicity
/// and a 1% sample of rec_bound_check; throws CacheError on the first failure.
BoundTable load_cache(const std::string& path);

}  // namespace laminar
