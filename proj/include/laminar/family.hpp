#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "laminar/block.hpp"

namespace laminar {

/// A duplicate-free set system over a common ground set {1..n}.
///
/// Members are always held in canonical order (see canonical_compare), so two
/// families with the same members are equal regardless of how they were built.
class Family {
 public:
  explicit Family(std::size_t ground_size = 0) : n_(ground_size) {}

  /// Throws std::invalid_argument on a duplicate member or a member whose
  /// ground size differs from `ground_size`.
  Family(std::size_t ground_size, std::vector<Block> sets);

  /// Like the constructor, but silently drops duplicates.
  static Family deduplicated(std::size_t ground_size, std::vector<Block> sets);

  static Family from_lists(std::size_t ground_size,
                           const std::vector<std::vector<int>>& lists);

  std::size_t ground_size() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  const Block& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  std::span<const Block> sets() const { return sets_; }

  bool contains(const Block& b) const;
  /// Members with cardinality >= k.
  std::size_t count_at_least(std::size_t k) const;
  /// Copy with one more member; throws std::invalid_argument if present.
  Family with(const Block& b) const&;
  Family with(const Block& b) &&;
  Family without(const Block& b) const;
  std::vector<std::vector<int>> to_lists() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Block> sets_;
};

}  // namespace laminar
