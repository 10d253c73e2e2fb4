#include "laminar/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace laminar {

namespace {

void check_ground(std::size_t n, const std::vector<Block>& sets) {
  for (const auto& b : sets)
    if (b.ground_size() != n)
      throw std::invalid_argument("block over ground size " + std::to_string(b.ground_size()) +
                                  " in family over ground size " + std::to_string(n));
}

}  // namespace

Family::Family(std::size_t ground_size, std::vector<Block> sets)
    : n_(ground_size), sets_(std::move(sets)) {
  check_ground(n_, sets_);
  std::sort(sets_.begin(), sets_.end(), CanonicalLess{});
  auto dup = std::adjacent_find(sets_.begin(), sets_.end());
  if (dup != sets_.end()) {
    std::string pts;
    for (int p : dup->points()) pts += (pts.empty() ? "" : " ") + std::to_string(p);
    throw std::invalid_argument("duplicate block {" + pts + "} in family");
  }
}

Family Family::deduplicated(std::size_t ground_size, std::vector<Block> sets) {
  check_ground(ground_size, sets);
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  Family f(ground_size);
  f.sets_ = std::move(sets);
  return f;
}

Family Family::from_lists(std::size_t ground_size, const std::vector<std::vector<int>>& lists) {
  std::vector<Block> sets;
  sets.reserve(lists.size());
  for (const auto& l : lists) sets.push_back(Block::from_points(ground_size, l));
  return Family(ground_size, std::move(sets));
}

bool Family::contains(const Block& b) const {
  return std::binary_search(sets_.begin(), sets_.end(), b, CanonicalLess{});
}

std::size_t Family::count_at_least(std::size_t k) const {
  // canonical order sorts by cardinality first
  auto it = std::partition_point(sets_.begin(), sets_.end(),
                                 [k](const Block& b) { return b.size() < k; });
  return static_cast<std::size_t>(sets_.end() - it);
}

Family Family::with(const Block& b) const& {
  Family copy = *this;
  return std::move(copy).with(b);
}

Family Family::with(const Block& b) && {
  if (b.ground_size() != n_) throw std::invalid_argument("block ground size differs from family");
  auto pos = std::lower_bound(sets_.begin(), sets_.end(), b, CanonicalLess{});
  if (pos != sets_.end() && *pos == b) throw std::invalid_argument("block already in family");
  sets_.insert(pos, b);
  return std::move(*this);
}

Family Family::without(const Block& b) const {
  std::vector<Block> sets;
  sets.reserve(sets_.size());
  for (const auto& s : sets_)
    if (s != b) sets.push_back(s);
  Family f(n_);
  f.sets_ = std::move(sets);
  return f;
}

std::vector<std::vector<int>> Family::to_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(sets_.size());
  for (const auto& b : sets_) out.push_back(b.points());
  return out;
}

}  // namespace laminar
