#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "effdim/path.hpp"
#include "effdim/quiver.hpp"
#include "effdim/rep.hpp"

namespace effdim {

enum class VerifyStatus { effective, collision, zero_action, relation_violation };

std::string to_string(VerifyStatus s);

/// Outcome of a brute-force effectiveness check. Failures carry a witness:
/// two paths with equal images (collision) or a single offending path.
struct VerifyReport {
  std::size_t checked = 0;
  std::size_t max_length = 0;
  VerifyStatus status = VerifyStatus::effective;
  std::vector<Path> witness;

  bool effective() const { return status == VerifyStatus::effective; }
};

struct VerifyOptions {
  unsigned threads = 1;
  /// Seeds the evaluation points used to fingerprint symbolic images.
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// Checks every element of P_N: nonzero paths of length < N act nonzero and
/// pairwise differently (trivial paths and z included), and every path of
/// length exactly N acts as zero. Throws std::invalid_argument when the rep
/// does not fit the quiver or truncation level.
VerifyReport verify_truncated(const GradedRep& rep, const Quiver& q, std::size_t truncation);

/// Bounded injectivity check of a symbolic path-semigroup representation on
/// all paths of length <= max_len, plus trivial paths and z.
///
/// Images are compared inside (tail, head, length) groups; distinct lengths
/// cannot collide because nonzero entries are homogeneous of degree equal to
/// the length. Within a group, images are bucketed by their value at random
/// points modulo 2^61-1, and bucket mates are compared exactly.
VerifyReport verify_path_rep(const SymbolicRep& rep, const Quiver& q, std::size_t max_len,
                             const VerifyOptions& options = {});

/// Every arrow sends a graded basis vector of grade k to graded vectors of
/// grade > k (or to zero / an ungraded vector), and no grade reaches N.
VerifyReport verify_filtration(const GradedRep& rep, const Quiver& q);

/// Raised when an exhaustive search would exceed its tractability guard.
class GuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// True iff some assignment of F_2 matrices with sum of D_x = total_dim
/// (every split over the vertices) is an effective P_N-representation.
/// Requires total_dim <= 4 and arrows * total_dim^2 <= 20.
bool exhaustive_lower_bound_f2(const Quiver& q, std::size_t truncation, std::size_t total_dim);

}  // namespace effdim
