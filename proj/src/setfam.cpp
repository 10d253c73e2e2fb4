#include "laminar/setfam.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "laminar/combinatorics.hpp"

namespace laminar {

namespace {

void require_strength(int t) {
  if (t < 1) throw std::invalid_argument("strength t must be >= 1, got " + std::to_string(t));
}

bool violates(const Block& a, const Block& b, int t) {
  return a.intersection_size(b) >= static_cast<std::size_t>(t) && !a.comparable(b);
}

// Matches Z's columns against the column patterns of the chosen M rows.
std::optional<std::vector<std::size_t>> match_columns(const BinaryMatrix& m,
                                                      const BinaryMatrix& z,
                                                      const std::vector<std::size_t>& rows) {
  const std::size_t r = rows.size();
  auto m_pattern = [&](std::size_t c) {
    std::uint32_t p = 0;
    for (std::size_t i = 0; i < r; ++i) p |= static_cast<std::uint32_t>(m.at(rows[i], c)) << i;
    return p;
  };
  std::vector<std::vector<std::size_t>> by_pattern(std::size_t{1} << r);
  for (std::size_t c = m.cols(); c-- > 0;) by_pattern[m_pattern(c)].push_back(c);
  std::vector<std::size_t> cols(z.cols());
  for (std::size_t c = 0; c < z.cols(); ++c) {
    std::uint32_t p = 0;
    for (std::size_t i = 0; i < r; ++i) p |= static_cast<std::uint32_t>(z.at(i, c)) << i;
    auto& pool = by_pattern[p];
    if (pool.empty()) return std::nullopt;
    cols[c] = pool.back();
    pool.pop_back();
  }
  return cols;
}

bool extend_rows(const BinaryMatrix& m, const BinaryMatrix& z, std::vector<std::size_t>& rows,
                 std::vector<bool>& used, ConfigEmbedding& out) {
  if (rows.size() == z.rows()) {
    auto cols = match_columns(m, z, rows);
    if (!cols) return false;
    out.rows = rows;
    out.cols = std::move(*cols);
    return true;
  }
  const std::size_t zr = rows.size();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (used[i]) continue;
    // A row with fewer ones than the Z row it must cover can never host it.
    std::size_t ones_m = 0, ones_z = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) ones_m += m.at(i, c);
    for (std::size_t c = 0; c < z.cols(); ++c) ones_z += z.at(zr, c);
    if (ones_m < ones_z) continue;
    used[i] = true;
    rows.push_back(i);
    if (extend_rows(m, z, rows, used, out)) return true;
    rows.pop_back();
    used[i] = false;
  }
  return false;
}

}  // namespace

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BinaryMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0 && rows[r][c] != 1)
        throw std::invalid_argument("matrix entries must be 0 or 1");
      out.set(r, c, rows[r][c] == 1);
    }
  }
  return out;
}

std::vector<std::vector<int>> BinaryMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c);
  return out;
}

bool is_t_laminar(const Family& family, int t) { return !laminarity_witness(family, t); }

std::optional<std::pair<Block, Block>> laminarity_witness(const Family& family, int t) {
  require_strength(t);
  const auto sets = family.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].size() < static_cast<std::size_t>(t)) continue;
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (violates(sets[i], sets[j], t)) return std::pair{sets[i], sets[j]};
  }
  return std::nullopt;
}

Family maximal_sets(const Family& family, bool exclude_universe) {
  const Block universe = Block::universe(family.ground_size());
  std::vector<Block> maximal;
  // Largest first: a member is maximal iff no larger maximal member holds it.
  for (auto it = family.sets().rbegin(); it != family.sets().rend(); ++it) {
    if (exclude_universe && *it == universe) continue;
    const bool covered = std::any_of(maximal.begin(), maximal.end(),
                                     [&](const Block& m) { return it->subset_of(m); });
    if (!covered) maximal.push_back(*it);
  }
  return Family(family.ground_size(), std::move(maximal));
}

BinaryMatrix incidence_matrix(const Family& family) {
  BinaryMatrix m(family.size(), family.ground_size());
  for (std::size_t r = 0; r < family.size(); ++r)
    for (int p : family[r].points()) m.set(r, static_cast<std::size_t>(p - 1), true);
  return m;
}

BinaryMatrix forbidden_matrix(int t) {
  require_strength(t);
  const auto cols = static_cast<std::size_t>(t) + 2;
  BinaryMatrix z(2, cols);
  z.set(1, 0, true);
  z.set(0, 1, true);
  for (std::size_t c = 2; c < cols; ++c) {
    z.set(0, c, true);
    z.set(1, c, true);
  }
  return z;
}

std::optional<ConfigEmbedding> find_config(const BinaryMatrix& m, const BinaryMatrix& z) {
  if (z.rows() > m.rows() || z.cols() > m.cols()) return std::nullopt;
  if (z.rows() > 24) throw std::invalid_argument("configuration has too many rows to search");
  std::vector<std::size_t> rows;
  std::vector<bool> used(m.rows(), false);
  ConfigEmbedding out;
  if (extend_rows(m, z, rows, used, out)) return out;
  return std::nullopt;
}

bool unique_chain_check(const Family& family, int t) {
  require_strength(t);
  const std::size_t n = family.ground_size();
  const auto tt = static_cast<std::size_t>(t);
  if (tt > n) return true;
  if (binomial_u64(n, tt) >= (std::uint64_t{1} << 63))
    throw std::length_error("too many t-subsets to index");

  std::uint64_t incidences = 0;
  for (const auto& b : family)
    if (b.size() >= tt) incidences += binomial_u64(b.size(), tt);
  if (incidences > 400'000'000ULL) throw std::length_error("family too large for chain check");

  // (t-subset rank, member index); members are in canonical, hence
  // nondecreasing-cardinality, order.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> incidence;
  incidence.reserve(static_cast<std::size_t>(incidences));
  std::vector<int> zero_based;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Block& b = family[i];
    if (b.size() < tt) continue;
    zero_based = b.points();
    for (auto& p : zero_based) --p;
    for_each_subset(zero_based, tt, [&](std::span<const int> sub) {
      incidence.emplace_back(colex_rank(sub), static_cast<std::uint32_t>(i));
    });
  }
  std::sort(incidence.begin(), incidence.end());
  for (std::size_t i = 1; i < incidence.size(); ++i) {
    if (incidence[i].first != incidence[i - 1].first) continue;
    if (!family[incidence[i - 1].second].subset_of(family[incidence[i].second])) return false;
  }
  return true;
}

}  // namespace laminar
