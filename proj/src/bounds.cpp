#include "laminar/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <optional>

#include "laminar/combinatorics.hpp"

namespace laminar {

namespace {

BigInt c2(long k) {
  if (k < 2) return 0;
  return BigInt(k) * (k - 1) / 2;
}

double c2d(long k) { return k < 2 ? 0.0 : static_cast<double>(k) * static_cast<double>(k - 1) / 2.0; }

void recompute_vertices(Frontier& f) {
  f.vertices.clear();
  const std::size_t lines = f.critical.size();
  // Chain order: critical[1], critical[2], ..., critical[last], critical[0].
  for (std::size_t i = 1; i < lines; ++i) {
    const Halfspace& next = (i + 1 < lines) ? f.critical[i + 1] : f.critical[0];
    f.vertices.push_back(boundary_intersection(f.critical[i], next));
  }
}

// Double-precision view of the table used to rank candidate m.
class Prefilter {
 public:
  explicit Prefilter(const BoundTable& table) {
    obf_.assign(2, 0.0);
    for (int k = 2; k <= table.max_n(); ++k) obf_.push_back(table.obf(k).get_d());
    for (const auto& change : table.frontier_log()) add_segment(change.n, table.frontier_at(change.n));
  }

  void record(const BoundTable& table, bool frontier_changed) {
    const int n = table.max_n();
    obf_.push_back(table.obf(n).get_d());
    if (frontier_changed) add_segment(n, table.frontier());
  }

  // Approximate LP(n, m) for 2 <= m < n into `out[m]`.
  void evaluate(int n, std::vector<double>& out) const {
    out.assign(static_cast<std::size_t>(n), -std::numeric_limits<double>::infinity());
    const double cn = c2d(n);
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      const auto& seg = segments_[s];
      const int lo = std::max(seg.first_m, 2);
      const int hi = s + 1 < segments_.size() ? std::min(segments_[s + 1].first_m, n) : n;
      for (int m = lo; m < hi; ++m) {
        const double cx = c2d(n - m);
        const double cy = cn - c2d(m);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t v = 0; v < seg.xs.size(); ++v) best = std::min(best, cx * seg.xs[v] + cy * seg.ys[v]);
        out[static_cast<std::size_t>(m)] = obf_[static_cast<std::size_t>(m)] + best;
      }
    }
  }

 private:
  struct Segment {
    int first_m;
    std::vector<double> xs;
    std::vector<double> ys;
  };

  void add_segment(int first_m, const Frontier& f) {
    Segment seg{first_m, {}, {}};
    for (const auto& p : f.vertices) {
      seg.xs.push_back(p.x.get_d());
      seg.ys.push_back(p.y.get_d());
    }
    segments_.push_back(std::move(seg));
  }

  std::vector<double> obf_;
  std::vector<Segment> segments_;
};

std::pair<Rat, int> exact_scan(int n, const BoundTable& table) {
  Rat best;
  int best_m = 0;
  for (int m = 2; m < n; ++m) {
    Rat v = lp_dual_value(n, m, table.frontier_at(m), table);
    if (best_m == 0 || v > best) {
      best = std::move(v);
      best_m = m;
    }
  }
  return {best + 1, best_m};
}

std::pair<Rat, int> filtered_scan(int n, const BoundTable& table, const Prefilter& filter,
                                  std::size_t top, std::vector<double>& scratch) {
  filter.evaluate(n, scratch);
  std::vector<int> order(static_cast<std::size_t>(n - 2));
  std::iota(order.begin(), order.end(), 2);
  const double best_d = *std::max_element(scratch.begin() + 2, scratch.end());
  // Rounding error of each approximate value is far below 1e-13 relative.
  const double margin = 1e-11 * (std::abs(best_d) + 1.0);
  std::vector<int> candidates;
  const std::size_t keep = std::min(top, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    [&](int a, int b) {
                      const double va = scratch[static_cast<std::size_t>(a)];
                      const double vb = scratch[static_cast<std::size_t>(b)];
                      return va != vb ? va > vb : a < b;
                    });
  candidates.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep));
  for (int m = 2; m < n; ++m)
    if (scratch[static_cast<std::size_t>(m)] >= best_d - margin) candidates.push_back(m);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  Rat best;
  int best_m = 0;
  for (int m : candidates) {
    Rat v = lp_dual_value(n, m, table.frontier_at(m), table);
    if (best_m == 0 || v > best) {
      best = std::move(v);
      best_m = m;
    }
  }
  return {best + 1, best_m};
}

}  // namespace

// --- halfspaces and frontier ------------------------------------------------

Halfspace Halfspace::nonnegative_x() { return Halfspace{1, 1, 0, 0}; }

Halfspace Halfspace::for_index(int k, const Rat& obf_k) {
  if (k < 2) throw std::invalid_argument("halfspace index must be >= 2");
  return Halfspace{k, c2(k - 1), c2(k), obf_k};
}

Point boundary_intersection(const Halfspace& h1, const Halfspace& h2) {
  const BigInt det = h1.a * h2.b - h2.a * h1.b;
  if (det == 0) throw std::domain_error("parallel halfspace boundaries");
  Rat x = (h1.c * h2.b - h2.c * h1.b) / Rat(det);
  Rat y = (h1.a * h2.c - h2.a * h1.c) / Rat(det);
  return {x, y};
}

Frontier Frontier::initial() {
  Frontier f;
  f.n = 2;
  f.critical = {Halfspace::nonnegative_x(), Halfspace::for_index(2, Rat(1))};
  recompute_vertices(f);
  return f;
}

std::vector<int> Frontier::critical_indices() const {
  std::vector<int> out;
  out.reserve(critical.size());
  for (const auto& h : critical) out.push_back(h.k);
  return out;
}

bool frontier_update_in_place(Frontier& frontier, int k_new, const Rat& obf_k) {
  if (k_new != frontier.n + 1)
    throw std::invalid_argument("frontier at stage " + std::to_string(frontier.n) + " cannot take index " +
                                std::to_string(k_new));
  const Halfspace h = Halfspace::for_index(k_new, obf_k);
  frontier.n = k_new;
  const bool redundant = std::all_of(frontier.vertices.begin(), frontier.vertices.end(),
                                     [&](const Point& p) { return h.contains(p); });
  if (redundant) return false;

  // The new boundary is the steepest non-vertical line, so it can only take
  // over the left end of the chain. Drop lines whose whole segment it covers.
  std::vector<Halfspace> lines(frontier.critical.begin() + 1, frontier.critical.end());
  while (lines.size() >= 2) {
    const Point corner = boundary_intersection(lines[lines.size() - 2], lines.back());
    if (h.lhs(corner) > h.c) break;
    lines.pop_back();
  }
  lines.push_back(h);
  frontier.critical.resize(1);
  frontier.critical.insert(frontier.critical.end(), lines.begin(), lines.end());
  recompute_vertices(frontier);
  return true;
}

Frontier frontier_update(const Frontier& frontier, int k_new, const Rat& obf_k) {
  Frontier out = frontier;
  frontier_update_in_place(out, k_new, obf_k);
  return out;
}

// --- table ------------------------------------------------------------------

BoundTable::BoundTable() : values_(4), argmax_(4, 0), current_(Frontier::initial()) {
  values_[2] = 1;
  values_[3] = 4;
  snapshots_.push_back(current_);
  snapshot_n_.push_back(2);
  log_.push_back({2, current_.critical_indices()});
  if (frontier_update_in_place(current_, 3, values_[3])) {
    snapshots_.push_back(current_);
    snapshot_n_.push_back(3);
    log_.push_back({3, current_.critical_indices()});
  }
}

const Rat& BoundTable::obf(int n) const {
  if (n < 2 || n > max_n()) throw std::out_of_range("obf(" + std::to_string(n) + ") not in table");
  return values_[static_cast<std::size_t>(n)];
}

int BoundTable::argmax(int n) const {
  if (n < 2 || n > max_n()) throw std::out_of_range("argmax(" + std::to_string(n) + ") not in table");
  return argmax_[static_cast<std::size_t>(n)];
}

const Frontier& BoundTable::frontier_at(int m) const {
  if (m < 2 || m > max_n()) throw std::out_of_range("frontier for stage " + std::to_string(m) + " not in table");
  auto it = std::upper_bound(snapshot_n_.begin(), snapshot_n_.end(), m);
  return snapshots_[static_cast<std::size_t>(it - snapshot_n_.begin() - 1)];
}

void BoundTable::append(const Rat& value, int argmax) {
  const int n = max_n() + 1;
  values_.push_back(value);
  argmax_.push_back(argmax);
  if (frontier_update_in_place(current_, n, value)) {
    snapshots_.push_back(current_);
    snapshot_n_.push_back(n);
    log_.push_back({n, current_.critical_indices()});
  }
}

// --- the linear program -------------------------------------------------------

Rat lp_dual_value(int n, int m, const Frontier& theta_m, const BoundTable& table) {
  if (m < 2 || m >= n) throw std::out_of_range("LP(n, m) requires 2 <= m < n");
  if (m > table.max_n()) throw std::out_of_range("obf(m) not yet in table");
  const BigInt cx = c2(n - m);
  const BigInt cy = c2(n) - c2(m);
  Rat best;
  bool first = true;
  for (const auto& p : theta_m.vertices) {
    Rat v = cx * p.x + cy * p.y;
    if (first || v < best) {
      best = std::move(v);
      first = false;
    }
  }
  return table.obf(m) + best;
}

Rat lp_dual_value(int n, int m, const BoundTable& table) {
  return lp_dual_value(n, m, table.frontier_at(m), table);
}

PrimalSolution lp_primal_oracle(int n, int m, const BoundTable& table) {
  if (m < 2 || m >= n) throw std::out_of_range("LP(n, m) requires 2 <= m < n");
  if (m > table.max_n()) throw std::out_of_range("obf(m) not yet in table");
  // budgets left once the forced block of size m is paid for
  const Rat pairs_left = Rat(c2(n) - c2(m));
  const Rat outside = Rat(c2(n - m));
  if (pairs_left < 0) throw std::domain_error("primal infeasible");

  const auto sz = static_cast<std::size_t>(m + 1);
  std::vector<Rat> p(sz), q(sz), w(sz);
  for (int k = 2; k <= m; ++k) {
    p[static_cast<std::size_t>(k)] = c2(k);
    q[static_cast<std::size_t>(k)] = c2(k - 1);
    w[static_cast<std::size_t>(k)] = table.obf(k);
  }

  Rat best = 0;
  std::vector<std::pair<int, Rat>> best_extra;
  auto consider = [&](Rat value, std::vector<std::pair<int, Rat>> extra) {
    if (value > best) {
      best = std::move(value);
      best_extra = std::move(extra);
    }
  };
  for (int k = 2; k <= m; ++k) {
    const auto i = static_cast<std::size_t>(k);
    Rat b = pairs_left / p[i];
    if (q[i] > 0) b = std::min(b, Rat(outside / q[i]));
    consider(w[i] * b, {{k, b}});
  }
  for (int k1 = 2; k1 <= m; ++k1) {
    for (int k2 = k1 + 1; k2 <= m; ++k2) {
      const auto i = static_cast<std::size_t>(k1), j = static_cast<std::size_t>(k2);
      const Rat det = p[i] * q[j] - p[j] * q[i];
      if (det == 0) continue;
      Rat b1 = (pairs_left * q[j] - p[j] * outside) / det;
      Rat b2 = (p[i] * outside - q[i] * pairs_left) / det;
      if (b1 < 0 || b2 < 0) continue;
      Rat value = w[i] * b1 + w[j] * b2;
      consider(std::move(value), {{k1, b1}, {k2, b2}});
    }
  }

  PrimalSolution sol;
  sol.value = table.obf(m) + best;
  Rat forced = 1;
  for (auto& [k, b] : best_extra) {
    if (b == 0) continue;
    if (k == m) {
      forced += b;
    } else {
      sol.profile.emplace_back(k, b);
    }
  }
  sol.profile.emplace_back(m, forced);
  return sol;
}

std::pair<Rat, int> obf_value(int n, const BoundTable& table, const ObfOptions& options) {
  if (n < 4) throw std::out_of_range("obf(n) is computed only for n >= 4");
  if (table.max_n() < n - 1) throw std::out_of_range("table does not reach n - 1");
  if (!options.prefilter) return exact_scan(n, table);
  Prefilter filter(table);
  std::vector<double> scratch;
  return filtered_scan(n, table, filter, options.prefilter_top, scratch);
}

void extend_table(BoundTable& table, int N, const ObfOptions& options) {
  if (table.max_n() >= N) return;
  std::optional<Prefilter> filter;
  if (options.prefilter) filter.emplace(table);
  std::vector<double> scratch;
  for (int n = table.max_n() + 1; n <= N; ++n) {
    auto [value, m] = options.prefilter ? filtered_scan(n, table, *filter, options.prefilter_top, scratch)
                                        : exact_scan(n, table);
    const std::size_t changes_before = table.frontier_log().size();
    table.append(value, m);
    if (filter) filter->record(table, table.frontier_log().size() != changes_before);
    if (options.progress && options.progress_every > 0 && n % options.progress_every == 0) options.progress(n, table);
  }
}

BoundTable obf_table(int N, const ObfOptions& options) {
  BoundTable table;
  extend_table(table, N, options);
  return table;
}

// --- reporting ----------------------------------------------------------------

Rat tail_sum(int N) {
  if (N < 2) throw std::out_of_range("tail_sum requires N >= 2");
  return make_rat(2, N);
}

UpperLimit upper_limit_report(const BoundTable& table, int N) {
  UpperLimit out;
  out.N = N;
  out.obf_N = table.obf(N);
  out.ratio = out.obf_N / Rat(c2(N));
  out.tail = tail_sum(N);
  out.upper = out.ratio + out.tail;
  return out;
}

std::vector<BigInt> projective_indices(int terms) {
  std::vector<BigInt> out;
  BigInt k = 3;
  for (int i = 0; i < terms; ++i) {
    out.push_back(k);
    k = k * k - k + 1;
  }
  return out;
}

Rat projective_series(int terms) {
  if (terms < 1) throw std::out_of_range("projective_series needs at least one term");
  Rat sum = 1;
  for (const auto& k : projective_indices(terms)) sum += make_rat(2, k * (k - 1));
  return sum;
}

bool rec_bound_check(const BoundTable& table, int n) {
  if (n <= 2) return true;
  Rat best_ratio = -1;
  for (int k = 2; k < n; ++k) best_ratio = std::max(best_ratio, Rat(table.obf(k) / c2(k)));
  const Rat cn = c2(n);
  return table.obf(n) / cn <= 1 / cn + best_ratio;
}

// --- persistence --------------------------------------------------------------

CacheError::CacheError(std::size_t line, std::string expected, std::string found)
    : std::runtime_error("cache line " + std::to_string(line) + ": expected " + expected + ", found " + found),
      line_(line),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

void save_cache(const BoundTable& table, const std::string& path) {
  int present = 1;
  {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) ++present;
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache '" + path + "' for writing");
  for (int n = std::max(present + 1, 2); n <= table.max_n(); ++n)
    out << n << '\t' << fraction_string(table.obf(n)) << '\n';
  if (!out) throw std::runtime_error("failed writing cache '" + path + "'");
}

BoundTable load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache '" + path + "'");
  BoundTable table;
  std::string line;
  std::size_t lineno = 0;
  int expected_n = 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw CacheError(lineno, std::to_string(expected_n) + "<TAB>p/q", "'" + line + "'");
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(line.substr(0, tab), &used);
      if (used != tab) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw CacheError(lineno, "integer index " + std::to_string(expected_n), "'" + line.substr(0, tab) + "'");
    }
    if (n != expected_n) throw CacheError(lineno, "index " + std::to_string(expected_n), std::to_string(n));
    Rat v;
    try {
      v = parse_fraction(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw CacheError(lineno, "fraction p/q", "'" + line.substr(tab + 1) + "'");
    }
    if (n <= 3) {
      const Rat base = table.obf(n);
      if (v != base) throw CacheError(lineno, "obf(" + std::to_string(n) + ") = " + fraction_string(base), fraction_string(v));
    } else {
      const Rat ceiling = 2 * Rat(c2(n));
      if (v > ceiling) throw CacheError(lineno, "value <= " + fraction_string(ceiling), fraction_string(v));
      if (v < table.obf(n - 1))
        throw CacheError(lineno, "value >= obf(" + std::to_string(n - 1) + ") = " + fraction_string(table.obf(n - 1)),
                         fraction_string(v));
      table.append(v, -1);
    }
    ++expected_n;
  }
  // Deterministic 1% sample, always including the last line.
  const int last = table.max_n();
  Rat best_ratio = table.obf(2);
  for (int n = 3; n <= last; ++n) {
    const Rat cn = c2(n);
    if ((n % 100 == 0 || n == last) && table.obf(n) / cn > 1 / cn + best_ratio)
      throw CacheError(static_cast<std::size_t>(n - 1), "obf(" + std::to_string(n) + ") satisfying the recursion bound",
                       fraction_string(table.obf(n)));
    best_ratio = std::max(best_ratio, Rat(table.obf(n) / cn));
  }
  return table;
}

}  // namespace laminar
