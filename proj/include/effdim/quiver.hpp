#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "effdim/ext_len.hpp"

namespace effdim {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string name;
  VertexId tail = 0;
  VertexId head = 0;
};

/// Raised when an operation is called outside its documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown by parse_quiver; line() is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Finite directed multigraph with named vertices and arrows.
///
/// Declaration order of vertices and arrows is the canonical index order.
/// Parallel arrows and loops are allowed; the vertex set must be nonempty.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// Arrows leaving / entering a vertex, in declaration order.
  const std::vector<ArrowId>& out_arrows(VertexId v) const { return out_.at(v); }
  const std::vector<ArrowId>& in_arrows(VertexId v) const { return in_.at(v); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
    for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
      const auto& x = a.arrows_[i];
      const auto& y = b.arrows_[i];
      if (x.name != y.name || x.tail != y.tail || x.head != y.head) return false;
    }
    return true;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
};

/// Parses the line format
///   vertex <id>
///   arrow <id>: <tail> -> <head>
/// with '#' comments and blank lines ignored.
Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::string& path);

/// Inverse of parse_quiver (canonical formatting, no comments).
std::string to_text(const Quiver& q);

bool is_valid_id(std::string_view id);

struct SccComponent {
  std::vector<VertexId> vertices;  // ascending
  std::size_t internal_arrows = 0;
  bool has_cycle = false;
  bool is_simple_cycle = false;
};

/// Strongly connected components (the classes of x ~ y).
///
/// Components are numbered by their smallest vertex index; condensation
/// holds the distinct inter-component edges (from, to), sorted.
struct SccPartition {
  std::vector<std::size_t> component_of;
  std::vector<SccComponent> components;
  std::vector<std::pair<std::size_t, std::size_t>> condensation;

  /// Component ids in a topological order of the condensation.
  std::vector<std::size_t> topological_order() const;
};

SccPartition sccs(const Quiver& q);

/// l_x^- (longest path ending at x) and l_x^+ (longest path starting at x).
struct VertexLengths {
  ExtLen incoming;
  ExtLen outgoing;
};

std::vector<VertexLengths> length_profile(const Quiver& q);

}  // namespace effdim
