#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "laminar/family.hpp"

namespace laminar {

enum class DesignKind { design, packing };

std::string to_string(DesignKind kind);
DesignKind design_kind_from_string(const std::string& s);

/// A block system on `v` points claimed to be a t-(v, K, lambda) design or
/// packing. Block sizes are per block; uniform sizes are the common case.
struct Design {
  int t = 2;
  std::size_t v = 0;
  int lambda = 1;
  DesignKind kind = DesignKind::design;
  Family blocks;

  std::vector<std::size_t> block_sizes() const;
  friend bool operator==(const Design&, const Design&) = default;
};

/// Every t-subset of points lies in exactly lambda blocks (and every block
/// has at least t points). Counts are taken over all C(v, t) subsets.
bool is_design(const Design& d);
/// As is_design, with "at most lambda".
bool is_packing(const Design& d);

/// 2-(q^2, q, 1): points GF(q)^2 in lexicographic coordinate order, blocks
/// the lines y = mx + b and x = c.
Design affine_plane(std::uint64_t q);

/// 2-(q^2+q+1, q+1, 1) from the 1- and 2-dimensional subspaces of GF(q)^3.
Design projective_plane(std::uint64_t q);

/// 3-(q^2+1, q+1, 1): images of GF(q) u {inf} under the fractional linear
/// maps of the projective line over GF(q^2). Points are the elements of
/// GF(q^2) by code, then infinity as the last point.
Design circle_geometry(std::uint64_t q);

/// Random-order greedy t-(n, k, 1) packing. Every k-subset is tried when
/// there are at most a few million of them; otherwise random k-subsets are
/// sampled for a bounded number of rounds.
Design greedy_packing(std::size_t n, std::size_t k, int t, std::uint64_t seed);

}  // namespace laminar
