#pragma once

// Independent reference routines for the tests. Nothing here calls into the
// library's algorithms; families are plain vectors of sorted point lists.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "laminar/family.hpp"
#include "laminar/rational.hpp"

namespace oracle {

using Sets = std::vector<std::vector<int>>;

inline std::vector<int> meet(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool includes(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline bool laminar(const Sets& f, int t) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (static_cast<int>(meet(f[i], f[j]).size()) >= t && !includes(f[i], f[j]) && !includes(f[j], f[i]))
        return false;
  return true;
}

/// Does some pair of distinct rows together with some t+2 distinct columns
/// match the 2 x (t+2) forbidden pattern, under any row and column order?
/// Tries every injective column assignment explicitly.
inline bool has_forbidden(const Sets& f, std::size_t n, int t) {
  const std::size_t width = static_cast<std::size_t>(t) + 2;
  if (width > n) return false;
  // pattern column c: (top, bottom)
  std::vector<std::pair<int, int>> pattern = {{0, 1}, {1, 0}};
  for (int i = 0; i < t; ++i) pattern.push_back({1, 1});
  std::vector<int> cols(n);
  std::iota(cols.begin(), cols.end(), 1);
  for (std::size_t r1 = 0; r1 < f.size(); ++r1) {
    for (std::size_t r2 = 0; r2 < f.size(); ++r2) {
      if (r1 == r2) continue;
      auto in = [&](std::size_t r, int p) { return std::binary_search(f[r].begin(), f[r].end(), p); };
      // enumerate injective maps pattern column -> matrix column
      std::vector<int> chosen(width, 0);
      std::vector<bool> used(n + 1, false);
      bool found = false;
      auto rec = [&](auto&& self, std::size_t c) -> void {
        if (found) return;
        if (c == width) {
          found = true;
          return;
        }
        for (int p = 1; p <= static_cast<int>(n); ++p) {
          if (used[static_cast<std::size_t>(p)]) continue;
          if (static_cast<int>(in(r1, p)) != pattern[c].first || static_cast<int>(in(r2, p)) != pattern[c].second)
            continue;
          used[static_cast<std::size_t>(p)] = true;
          self(self, c + 1);
          used[static_cast<std::size_t>(p)] = false;
        }
      };
      rec(rec, 0);
      if (found) return true;
    }
  }
  return false;
}

/// For each t-subset S of [n]: S together with the members containing S must
/// form a chain.
inline bool chains(const Sets& f, std::size_t n, int t) {
  std::vector<int> s(static_cast<std::size_t>(t));
  bool ok = true;
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (!ok) return;
    if (depth == t) {
      Sets above = {s};
      for (const auto& m : f)
        if (includes(m, s)) above.push_back(m);
      for (std::size_t i = 0; i < above.size() && ok; ++i)
        for (std::size_t j = i + 1; j < above.size() && ok; ++j)
          if (!includes(above[i], above[j]) && !includes(above[j], above[i])) ok = false;
      return;
    }
    for (int p = start; p <= static_cast<int>(n); ++p) {
      s[static_cast<std::size_t>(depth)] = p;
      self(self, p + 1, depth + 1);
    }
  };
  if (t >= 1 && static_cast<std::size_t>(t) <= n) rec(rec, 1, 0);
  return ok;
}

/// Random family of distinct nonempty subsets of [n]. Half of the draws grow
/// a laminar-looking family by splitting existing members, so both outcomes
/// of the laminarity tests are well represented.
inline Sets random_family(std::mt19937_64& rng, std::size_t n, std::size_t max_sets) {
  std::uniform_int_distribution<std::size_t> count(1, max_sets);
  const std::size_t target = count(rng);
  std::set<std::vector<int>> out;
  auto random_subset = [&](const std::vector<int>& pool) {
    std::vector<int> s;
    while (s.empty())
      for (int p : pool)
        if (rng() & 1U) s.push_back(p);
    return s;
  };
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  const bool structured = rng() & 1U;
  std::vector<std::vector<int>> pool = {all};
  for (std::size_t guard = 0; out.size() < target && guard < 200; ++guard) {
    if (structured) {
      const auto& parent = pool[rng() % pool.size()];
      auto child = random_subset(parent);
      if (rng() % 5 == 0) {  // occasional stray point breaks the structure
        child.push_back(static_cast<int>(1 + rng() % n));
        std::sort(child.begin(), child.end());
        child.erase(std::unique(child.begin(), child.end()), child.end());
      }
      if (out.insert(child).second) pool.push_back(child);
    } else {
      out.insert(random_subset(all));
    }
  }
  return Sets(out.begin(), out.end());
}

inline laminar::Family to_family(std::size_t n, const Sets& f) { return laminar::Family::from_lists(n, f); }

/// Rows of tests/data/obf_oracle.tsv: value and smallest maximizing m.
struct ObfRow {
  int n;
  laminar::Rat value;
  int argmax;
};

inline std::vector<ObfRow> frozen_obf() {
  std::ifstream in(std::string(LAMINAR_TEST_DATA) + "/obf_oracle.tsv");
  std::vector<ObfRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string n, v, m;
    std::getline(ss, n, '\t');
    std::getline(ss, v, '\t');
    std::getline(ss, m, '\t');
    laminar::Rat r(v);
    r.canonicalize();
    rows.push_back({std::stoi(n), r, std::stoi(m)});
  }
  return rows;
}

/// Schoolbook product of two polynomials over Z_p reduced by a monic modulus;
/// coefficient vectors are low-to-high.
inline std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                              const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
  }
  std::vector<std::uint32_t> out(k, 0);
  for (std::size_t i = 0; i < k && i < prod.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

}  // namespace oracle
