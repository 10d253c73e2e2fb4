#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "laminar/block.hpp"
#include "laminar/family.hpp"

namespace laminar {

/// Dense 0/1 matrix, row-major.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, bool v) { data_[r * cols_ + c] = v ? 1 : 0; }
  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Row r of the match is M-row rows[r]; column c is M-column cols[c].
struct ConfigEmbedding {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

// --- t-laminarity -----------------------------------------------------------

/// True iff every two members meeting in at least t points are nested.
bool is_t_laminar(const Family& family, int t);

/// First violating pair in canonical order, or nullopt if the family is
/// t-laminar.
std::optional<std::pair<Block, Block>> laminarity_witness(const Family& family, int t);

/// Maximal members, optionally after removing the universe [n].
Family maximal_sets(const Family& family, bool exclude_universe);

/// M(F): one row per member (canonical order), entry (A, i) = [i in A].
BinaryMatrix incidence_matrix(const Family& family);

/// The 2 x (t+2) configuration with one (0,1) column, one (1,0) column and
/// t (1,1) columns, in that order.
BinaryMatrix forbidden_matrix(int t);

/// Searches M for a row- and column-permuted copy of Z.
std::optional<ConfigEmbedding> find_config(const BinaryMatrix& m, const BinaryMatrix& z);
inline bool contains_config(const BinaryMatrix& m, const BinaryMatrix& z) {
  return find_config(m, z).has_value();
}

/// Every t-subset of [n] (the family is implicitly augmented with all of
/// them) lies below a chain: the members of size >= t containing it are
/// totally ordered by inclusion. Runs in time proportional to the number of
/// (member, t-subset) incidences, so it also serves as the fast laminarity
/// certificate for large families.
bool unique_chain_check(const Family& family, int t);

}  // namespace laminar
