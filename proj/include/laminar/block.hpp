#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace laminar {

/// A subset of the ground set {1..n}, stored as an n-bit vector.
///
/// Point i (1-based) lives in bit (i-1). Blocks over different ground sizes
/// never compare equal.
class Block {
 public:
  Block() = default;
  explicit Block(std::size_t ground_size);

  /// Builds a block from 1-based points; throws std::out_of_range for points
  /// outside {1..n}.
  static Block from_points(std::size_t ground_size, std::span<const int> points);
  static Block from_points(std::size_t ground_size, std::initializer_list<int> points);
  static Block universe(std::size_t ground_size);

  std::size_t ground_size() const { return n_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(int point) const;
  void insert(int point);
  void erase(int point);

  std::size_t intersection_size(const Block& other) const;
  bool subset_of(const Block& other) const;
  bool comparable(const Block& other) const {
    return subset_of(other) || other.subset_of(*this);
  }

  /// Sorted 1-based members.
  std::vector<int> points() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const Block& a, const Block& b) = default;

  /// Canonical order: by cardinality, then by the numeric value of the bit
  /// vector (most significant point first).
  friend std::strong_ordering canonical_compare(const Block& a, const Block& b);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CanonicalLess {
  bool operator()(const Block& a, const Block& b) const {
    return canonical_compare(a, b) < 0;
  }
};

}  // namespace laminar
