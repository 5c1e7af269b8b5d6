#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "effdim/path.hpp"
#include "effdim/quiver.hpp"

namespace effdim::testing {

inline constexpr std::uint64_t kSuiteSeed = 20240607;
inline constexpr std::size_t kSuiteSize = 200;

/// n uniform in 1..5, m uniform in 0..7, endpoints uniform.
std::vector<Quiver> random_suite(std::uint64_t seed = kSuiteSeed, std::size_t count = kSuiteSize);

Quiver make_quiver(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows);

/// Every orientation of the line quiver on n vertices (2^(n-1) of them).
std::vector<Quiver> line_orientations(std::size_t n);

/// reach[k][x][y]: some path of length exactly k from x to y (boolean matrix powers).
using BoolMatrix = std::vector<std::vector<bool>>;
std::vector<BoolMatrix> reach_by_length(const Quiver& q, std::size_t max_len);

/// Longest path ending / starting at x, nullopt for unbounded.
struct BruteLengths {
  std::optional<std::size_t> in, out;
};
std::vector<BruteLengths> brute_lengths(const Quiver& q);

/// Grades k in [0, N) with a length-k path into x and a length-(N-1-k) path out of x.
std::vector<std::size_t> brute_k_set(const Quiver& q, VertexId x, std::size_t truncation);

/// max(|K(x)|, 1) summed over vertices.
std::size_t brute_effdim_truncated(const Quiver& q, std::size_t truncation);

/// Cycles at x of length <= max_len with no intermediate visit, by plain DFS.
std::vector<std::vector<ArrowId>> brute_first_returns(const Quiver& q, VertexId x, std::size_t max_len);

std::string describe(const Quiver& q);

}  // namespace effdim::testing
