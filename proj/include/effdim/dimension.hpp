#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "effdim/ext_len.hpp"
#include "effdim/quiver.hpp"

namespace effdim {

/// Vertices whose cycle monoid is noncommutative (A) and the rest (B).
struct PathClassification {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  std::vector<bool> in_a;  // indexed by vertex
};

PathClassification classify_path(const Quiver& q);

/// eff.dim of the path semigroup: |A| + n.
std::size_t effdim_path(const Quiver& q);

/// Closed integer interval [lo, hi].
struct KInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t size() const { return hi - lo + 1; }
  bool contains(std::size_t k) const { return lo <= k && k <= hi; }
  friend bool operator==(const KInterval&, const KInterval&) = default;
};

/// Grades k in [0, N) that admit a path of length k into x and a path of
/// length N-1-k out of x, together with the resulting local dimensions.
///
/// a_n / b_n split the vertices by K(x) nonempty / empty. They are a
/// different split from PathClassification and must not be mixed with it.
struct KProfile {
  std::size_t truncation = 1;
  std::vector<VertexLengths> lengths;
  std::vector<std::optional<KInterval>> k;
  std::vector<std::size_t> d;
  std::vector<VertexId> a_n;
  std::vector<VertexId> b_n;

  std::size_t total() const;
};

KProfile k_profile(const Quiver& q, std::size_t truncation);

/// K(x) from the two path-length suprema; empty iff l^- + l^+ < N-1.
std::optional<KInterval> k_interval(ExtLen l_minus, ExtLen l_plus, std::size_t truncation);

/// min{l^- + 1, l^+ + 1, N, max{l^- + l^+ + 2 - N, 1}}.
std::size_t d_value(ExtLen l_minus, ExtLen l_plus, std::size_t truncation);

/// eff.dim of the truncated path semigroup P_N: the sum of d_x.
std::size_t effdim_truncated(const Quiver& q, std::size_t truncation);

/// eff.dim(P_N) = a*N + b for all N >= threshold.
struct Stabilization {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t threshold = 1;
  friend bool operator==(const Stabilization&, const Stabilization&) = default;
};

Stabilization stabilization(const Quiver& q);

/// Closed form for quivers of type A_n given the vertex counts of their
/// maximal directed runs (consecutive runs share one endpoint).
std::size_t an_closed_form(std::span<const std::size_t> segments, std::size_t truncation);

/// Run decomposition of a type-A quiver (underlying graph is a simple
/// path, or a single vertex); nullopt for any other quiver.
std::optional<std::vector<std::size_t>> an_segments(const Quiver& q);

}  // namespace effdim
