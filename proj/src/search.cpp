#include "laminar/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace laminar {

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t count(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Bits>& adj, double budget_seconds)
      : adj_(adj),
        words_(adj.empty() ? 0 : adj.front().size()),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget_seconds))) {}

  CliqueResult run() {
    Bits all(words_, 0);
    for (std::size_t v = 0; v < adj_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    if (!adj_.empty()) expand(all);
    CliqueResult out;
    out.members = best_;
    out.exact = !timed_out_;
    out.nodes = nodes_;
    return out;
  }

 private:
  void colour(const Bits& p, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    Bits uncoloured = p;
    std::size_t k = 0;
    while (any(uncoloured)) {
      ++k;
      Bits q = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
          q[w] &= q[w] - 1;
          uncoloured[v / 64] &= ~(std::uint64_t{1} << (v % 64));
          for (std::size_t x = w; x < words_; ++x) q[x] &= ~adj_[v][x];
          order.push_back(v);
          bound.push_back(k);
        }
      }
    }
  }

  void expand(Bits p) {
    if (timed_out_) return;
    if ((++nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }
    std::vector<std::size_t> order, bound;
    colour(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & adj_[v][w];
      if (any(next)) {
        expand(std::move(next));
      } else if (current_.size() > best_.size()) {
        best_ = current_;
      }
      current_.pop_back();
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      if (timed_out_) return;
    }
  }

  const std::vector<Bits>& adj_;
  std::size_t words_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

CompatGraph build_compat_graph(std::size_t n, int t, std::size_t min_size) {
  if (t < 1) throw std::invalid_argument("strength t must be >= 1");
  if (n > 12) throw std::invalid_argument("compatibility graph limited to n <= 12");
  CompatGraph g;
  g.n = n;
  g.t = t;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) < min_size) continue;
    Block b(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) b.insert(static_cast<int>(i + 1));
    g.vertices.push_back(std::move(b));
  }
  std::sort(g.vertices.begin(), g.vertices.end(), CanonicalLess{});
  const std::size_t v = g.vertices.size();
  const std::size_t words = (v + 63) / 64;
  g.adjacency.assign(v, Bits(words, 0));
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      const Block& a = g.vertices[i];
      const Block& b = g.vertices[j];
      if (a.intersection_size(b) < static_cast<std::size_t>(t) || a.comparable(b)) {
        g.adjacency[i][j / 64] |= std::uint64_t{1} << (j % 64);
        g.adjacency[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
  return g;
}

CliqueResult max_clique(const CompatGraph& graph, double budget_seconds) {
  const std::size_t v = graph.vertices.size();
  // Vertices adjacent to everything belong to every maximum clique.
  std::vector<std::size_t> universal, rest;
  for (std::size_t i = 0; i < v; ++i) {
    const bool all = count(graph.adjacency[i]) + 1 == v;
    (all ? universal : rest).push_back(i);
  }
  // Search order: degree descending, ties by canonical block order.
  std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
    return count(graph.adjacency[a]) > count(graph.adjacency[b]);
  });
  const std::size_t r = rest.size();
  const std::size_t words = (r + 63) / 64;
  std::vector<Bits> adj(r, Bits(words, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && graph.adjacent(rest[i], rest[j])) adj[i][j / 64] |= std::uint64_t{1} << (j % 64);

  CliqueResult inner = CliqueSearch(adj, budget_seconds).run();
  CliqueResult out;
  out.exact = inner.exact;
  out.nodes = inner.nodes;
  out.members = universal;
  for (auto i : inner.members) out.members.push_back(rest[i]);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

SearchResult max_laminar_exact(std::size_t n, int t, const SearchOptions& options) {
  if (t < 1) throw std::invalid_argument("strength t must be >= 1");
  if (n < 1 || n > 9) throw std::invalid_argument("exact search supports 1 <= n <= 9");
  const std::size_t min_size = options.convention == SizeConvention::f_convention
                                   ? std::max<std::size_t>(static_cast<std::size_t>(t), 2)
                                   : static_cast<std::size_t>(t);
  const CompatGraph g = build_compat_graph(n, t, min_size);
  const CliqueResult c = max_clique(g, options.budget_seconds);
  std::vector<Block> members;
  for (auto i : c.members) members.push_back(g.vertices[i]);
  SearchResult out;
  out.size = members.size();
  out.witness = Family(n, std::move(members));
  out.exact = c.exact;
  out.nodes = c.nodes;
  return out;
}

std::size_t max_laminar_classic(std::size_t n, double budget_seconds) {
  if (n < 1 || n > 8) throw std::invalid_argument("classic search supports 1 <= n <= 8");
  const CompatGraph g = build_compat_graph(n, 1, 1);
  return max_clique(g, budget_seconds).members.size();
}

GapReport verify_gap(std::size_t n, int t, const BigInt& construction, const SearchResult& search,
                     const BoundTable* table) {
  GapReport out;
  out.n = n;
  out.t = t;
  out.construction = construction;
  out.search = search.size;
  out.search_exact = search.exact;
  if (table != nullptr && t == 2 && n >= 2 && static_cast<int>(n) <= table->max_n()) out.obf = table->obf(static_cast<int>(n));
  out.holds = construction <= BigInt(static_cast<unsigned long>(search.size));
  if (out.obf) out.holds = out.holds && Rat(static_cast<unsigned long>(search.size)) <= *out.obf;
  return out;
}

}  // namespace laminar
