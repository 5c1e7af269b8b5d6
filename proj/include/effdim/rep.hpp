#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "effdim/dimension.hpp"
#include "effdim/path.hpp"
#include "effdim/poly.hpp"
#include "effdim/quiver.hpp"

namespace effdim {

// ---------------------------------------------------------------------------
// Formal variables
// ---------------------------------------------------------------------------

enum class VarKind : std::uint32_t { tau = 0, eta = 1, zeta = 2 };

/// Variables tau/eta/zeta of an arrow, indexed by (arrow, kind).
constexpr VarIndex symbolic_variable(ArrowId a, VarKind k) {
  return static_cast<VarIndex>(3 * a + static_cast<std::uint32_t>(k));
}

/// Names such as "tau(a)".
VariableNamer symbolic_namer(const Quiver& q);
std::optional<VarIndex> parse_symbolic_variable(const Quiver& q, std::string_view name);

/// Formal label standing in for the coefficient p_{a,k} over an uncountable field.
constexpr VarIndex graded_variable(ArrowId a, std::size_t k, std::size_t truncation) {
  return static_cast<VarIndex>(a * truncation + k);
}

/// Names such as "lambda(a,2)".
VariableNamer graded_namer(const Quiver& q, std::size_t truncation);
std::optional<VarIndex> parse_graded_variable(const Quiver& q, std::size_t truncation, std::string_view name);

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

/// Block representation of the path semigroup over Q(tau, eta, zeta).
struct SymbolicRep {
  std::vector<std::size_t> dims;    // 2 on noncommutative vertices, else 1
  std::vector<PolyMatrix> arrows;   // dims[head] x dims[tail]

  std::size_t total_dimension() const;
};

SymbolicRep build_path_rep(const Quiver& q);

/// 2x2 upper triangular generator matrix (tau eta; 0 zeta) of a letter.
PolyMatrix letter_matrix(ArrowId letter);

/// Entry (1,2) of letter_matrix(w[0]) * ... * letter_matrix(w[l-1]) by the
/// closed-form sum over positions.
MultiPoly lemma3_entry(std::span<const ArrowId> word);

enum class LabelField { primes, transcendental };

/// label_table[a][k] is the coefficient attached to arrow a leaving grade k.
using LabelTable = std::vector<std::vector<MultiPoly>>;

/// First `count` primes, 2, 3, 5, ...
std::vector<Integer> first_primes(std::size_t count);

/// Injective (arrow, k) -> prime for 0 <= k < N, in (arrow, k) order.
std::vector<std::vector<Integer>> allocate_primes(const Quiver& q, std::size_t truncation);

/// v_x^(k) for graded basis vectors, plain v_x otherwise.
struct BasisLabel {
  VertexId vertex = 0;
  std::optional<std::size_t> grade;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

std::string to_string(const Quiver& q, const BasisLabel& label);

/// Graded representation of the truncated path semigroup P_N.
///
/// Every arrow matrix has at most one nonzero entry per column, which is the
/// label of (arrow, grade of the source basis vector).
struct GradedRep {
  std::size_t truncation = 1;
  LabelField labels = LabelField::primes;
  std::vector<std::vector<BasisLabel>> basis;  // per vertex, ascending grade
  std::vector<PolyMatrix> arrows;              // dim(head) x dim(tail)
  LabelTable label_table;                      // may be empty for loaded reps

  std::size_t dim(VertexId x) const { return basis.at(x).size(); }
  std::size_t total_dimension() const;
};

GradedRep build_truncated_rep(const Quiver& q, std::size_t truncation, LabelField labels = LabelField::primes);

/// Same construction with caller-supplied coefficients; the result is only
/// effective when the table is injective on the used pairs.
GradedRep build_truncated_rep(const Quiver& q, std::size_t truncation, const LabelTable& table,
                              LabelField labels = LabelField::primes);

/// Value R(p) of a path: z is a flagged zero without endpoints, e(x) the
/// identity of V_x, and arrow paths the product of their arrow matrices.
struct RepImage {
  bool zero = true;
  VertexId tail = 0;
  VertexId head = 0;
  PolyMatrix matrix;

  /// z, or a path acting as the zero map.
  bool acts_as_zero() const { return zero || matrix.is_zero(); }

  /// All zero actions are the same semigroup element.
  friend bool operator==(const RepImage& a, const RepImage& b) {
    if (a.acts_as_zero() || b.acts_as_zero()) return a.acts_as_zero() && b.acts_as_zero();
    return a.tail == b.tail && a.head == b.head && a.matrix == b.matrix;
  }
};

RepImage rep_of_path(std::span<const std::size_t> dims, std::span<const PolyMatrix> arrows, const Path& p);
RepImage rep_of_path(const SymbolicRep& rep, const Path& p);
RepImage rep_of_path(const GradedRep& rep, const Path& p);

/// Dimension vector of a graded rep.
std::vector<std::size_t> dims_of(const GradedRep& rep);

}  // namespace effdim
