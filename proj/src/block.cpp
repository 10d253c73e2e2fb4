#include "laminar/block.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace laminar {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

}  // namespace

Block::Block(std::size_t ground_size) : n_(ground_size), words_(word_count(ground_size), 0) {}

Block Block::from_points(std::size_t ground_size, std::span<const int> points) {
  Block b(ground_size);
  for (int p : points) b.insert(p);
  return b;
}

Block Block::from_points(std::size_t ground_size, std::initializer_list<int> points) {
  return from_points(ground_size, std::span<const int>(points.begin(), points.size()));
}

Block Block::universe(std::size_t ground_size) {
  Block b(ground_size);
  for (std::size_t i = 0; i < b.words_.size(); ++i) b.words_[i] = ~std::uint64_t{0};
  if (const std::size_t rem = ground_size % kWordBits; rem != 0)
    b.words_.back() = (std::uint64_t{1} << rem) - 1;
  return b;
}

std::size_t Block::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Block::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool Block::contains(int point) const {
  if (point < 1 || static_cast<std::size_t>(point) > n_) return false;
  const auto i = static_cast<std::size_t>(point - 1);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void Block::insert(int point) {
  if (point < 1 || static_cast<std::size_t>(point) > n_)
    throw std::out_of_range("point " + std::to_string(point) + " outside ground set of size " +
                            std::to_string(n_));
  const auto i = static_cast<std::size_t>(point - 1);
  words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

void Block::erase(int point) {
  if (point < 1 || static_cast<std::size_t>(point) > n_) return;
  const auto i = static_cast<std::size_t>(point - 1);
  words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

std::size_t Block::intersection_size(const Block& other) const {
  const std::size_t w = std::min(words_.size(), other.words_.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < w; ++i)
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return total;
}

bool Block::subset_of(const Block& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~theirs) != 0) return false;
  }
  return true;
}

std::vector<int> Block::points() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<int>(wi * kWordBits) + bit + 1);
      w &= w - 1;
    }
  }
  return out;
}

std::strong_ordering canonical_compare(const Block& a, const Block& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace laminar
