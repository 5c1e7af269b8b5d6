#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "effdim/quiver.hpp"

namespace effdim {

/// Element of the path semigroup: the zero z, a trivial path e(x), or a
/// nonempty sequence of composable arrows.
///
/// Arrow sequences are stored in traversal order: arrows()[0] is applied
/// first, so it is the rightmost factor in the written product.
class Path {
 public:
  enum class Kind { zero, trivial, arrows };

  static Path zero() { return Path(); }
  static Path trivial(VertexId x);
  /// Validates composability; an empty sequence is rejected.
  static Path from_arrows(const Quiver& q, std::vector<ArrowId> arrows);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::zero; }
  bool is_trivial() const { return kind_ == Kind::trivial; }

  /// Undefined (nullopt) for z.
  std::optional<std::size_t> length() const;
  VertexId tail() const;
  VertexId head() const;
  std::span<const ArrowId> arrows() const { return arrows_; }

  friend Path compose(const Path& p, const Path& q);
  friend bool operator==(const Path&, const Path&) = default;
  /// (kind, length, tail, arrows) order; used for containers only.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);

 private:
  Kind kind_ = Kind::zero;
  VertexId tail_ = 0;
  VertexId head_ = 0;
  std::vector<ArrowId> arrows_;
};

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept;
};

/// Semigroup product p*q: q is traversed first, then p.
Path compose(const Path& p, const Path& q);

/// "z", "e(x)" or "b*a" (rightmost arrow first in traversal).
std::string to_string(const Quiver& q, const Path& p);
Path parse_path(const Quiver& q, std::string_view text);

/// All nonzero paths of length <= max_len, ordered by (length, arrow-index
/// sequence in traversal order); trivial paths come first by vertex index.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len);

/// Visits paths of length exactly `len` in the same order without storing them.
void for_each_path_of_length(const Quiver& q, std::size_t len,
                             const std::function<void(std::span<const ArrowId>)>& visit);

struct CycleBasis {
  VertexId vertex = 0;
  std::vector<Path> cycles;
  bool complete = false;
};

/// First-return cycles at x (cycles with no intermediate visit to x) up to
/// max_len. `complete` is set when M_x is finite and fully inside the bound.
CycleBasis first_return_cycles(const Quiver& q, VertexId x, std::size_t max_len);

/// Length of the longest first-return cycle at x; nullopt when M_x is
/// infinite, 0 when M_x is empty.
std::optional<std::size_t> longest_first_return(const Quiver& q, VertexId x);

/// Unique factorization of a cycle at x into first-return cycles, listed in
/// written order (factors[0] is traversed last). Trivial paths factor as [].
std::vector<Path> factorize_cycle(const Quiver& q, const Path& p);

/// True iff the monoid of cycles at x is commutative (|M_x| <= 1).
bool is_commutative_at(const Quiver& q, VertexId x);

}  // namespace effdim
