#include "effdim/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace effdim {

bool is_valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  if (vertices_.empty()) throw std::invalid_argument("quiver has no vertices");
  std::set<std::string_view> seen;
  for (const auto& v : vertices_) {
    if (!is_valid_id(v)) throw std::invalid_argument("invalid vertex id '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex id '" + v + "'");
  }
  seen.clear();
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (ArrowId a = 0; a < arrows_.size(); ++a) {
    const auto& arr = arrows_[a];
    if (!is_valid_id(arr.name)) throw std::invalid_argument("invalid arrow id '" + arr.name + "'");
    if (!seen.insert(arr.name).second) throw std::invalid_argument("duplicate arrow id '" + arr.name + "'");
    if (arr.tail >= vertices_.size() || arr.head >= vertices_.size())
      throw std::invalid_argument("arrow '" + arr.name + "' has an endpoint outside the vertex set");
    out_[arr.tail].push_back(a);
    in_[arr.head].push_back(a);
  }
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  auto it = std::find_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.name == name; });
  if (it == arrows_.end()) return std::nullopt;
  return static_cast<ArrowId>(it - arrows_.begin());
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

struct PendingArrow {
  std::string name, tail, head;
  std::size_t line;
};

}  // namespace

Quiver parse_quiver(std::string_view text) {
  static const std::regex vertex_re(R"(^vertex\s+([A-Za-z0-9_]+)$)");
  static const std::regex arrow_re(R"(^arrow\s+([A-Za-z0-9_]+)\s*:\s*([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+)$)");

  std::vector<std::string> vertices;
  std::unordered_map<std::string, VertexId> vertex_index;
  std::vector<PendingArrow> pending;
  std::set<std::string> arrow_names;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line(trim(raw));
    if (line.empty()) continue;

    std::smatch m;
    if (std::regex_match(line, m, vertex_re)) {
      const std::string id = m[1];
      if (vertex_index.count(id)) throw ParseError(line_no, "duplicate vertex id '" + id + "'");
      vertex_index.emplace(id, vertices.size());
      vertices.push_back(id);
    } else if (std::regex_match(line, m, arrow_re)) {
      const std::string id = m[1];
      if (!arrow_names.insert(id).second) throw ParseError(line_no, "duplicate arrow id '" + id + "'");
      pending.push_back({id, m[2], m[3], line_no});
    } else {
      throw ParseError(line_no, "malformed line '" + line + "'");
    }
  }

  std::vector<Arrow> arrows;
  arrows.reserve(pending.size());
  for (const auto& p : pending) {
    auto t = vertex_index.find(p.tail);
    if (t == vertex_index.end()) throw ParseError(p.line, "undeclared vertex '" + p.tail + "'");
    auto h = vertex_index.find(p.head);
    if (h == vertex_index.end()) throw ParseError(p.line, "undeclared vertex '" + p.head + "'");
    arrows.push_back({p.name, t->second, h->second});
  }
  if (vertices.empty()) throw ParseError(0, "quiver declares no vertices");
  return Quiver(std::move(vertices), std::move(arrows));
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open quiver file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

std::string to_text(const Quiver& q) {
  std::ostringstream out;
  for (const auto& v : q.vertices()) out << "vertex " << v << '\n';
  for (const auto& a : q.arrows())
    out << "arrow " << a.name << ": " << q.vertex_name(a.tail) << " -> " << q.vertex_name(a.head) << '\n';
  return out.str();
}

SccPartition sccs(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  // Tarjan, iterative.
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), raw_comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::size_t counter = 0, raw_count = 0;

  struct Frame {
    VertexId v;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& f = call.back();
      const auto& outs = q.out_arrows(f.v);
      if (f.next < outs.size()) {
        VertexId w = q.arrow(outs[f.next++]).head;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      VertexId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          raw_comp[w] = raw_count;
        } while (w != v);
        ++raw_count;
      }
    }
  }

  // Renumber by smallest member vertex.
  std::vector<std::size_t> renumber(raw_count, unvisited);
  std::size_t next_id = 0;
  for (VertexId v = 0; v < n; ++v)
    if (renumber[raw_comp[v]] == unvisited) renumber[raw_comp[v]] = next_id++;

  SccPartition part;
  part.component_of.resize(n);
  part.components.resize(raw_count);
  for (VertexId v = 0; v < n; ++v) {
    part.component_of[v] = renumber[raw_comp[v]];
    part.components[part.component_of[v]].vertices.push_back(v);
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& a : q.arrows()) {
    auto ct = part.component_of[a.tail], ch = part.component_of[a.head];
    if (ct == ch)
      ++part.components[ct].internal_arrows;
    else
      edges.emplace(ct, ch);
  }
  for (auto& c : part.components) {
    c.has_cycle = c.vertices.size() > 1 || c.internal_arrows > 0;
    c.is_simple_cycle = c.has_cycle && c.internal_arrows == c.vertices.size();
  }
  part.condensation.assign(edges.begin(), edges.end());
  return part;
}

std::vector<std::size_t> SccPartition::topological_order() const {
  const std::size_t k = components.size();
  std::vector<std::size_t> indeg(k, 0);
  std::vector<std::vector<std::size_t>> succ(k);
  for (auto [from, to] : condensation) {
    succ[from].push_back(to);
    ++indeg[to];
  }
  std::vector<std::size_t> order, ready;
  for (std::size_t c = k; c-- > 0;)
    if (indeg[c] == 0) ready.push_back(c);
  while (!ready.empty()) {
    auto c = ready.back();
    ready.pop_back();
    order.push_back(c);
    for (auto d : succ[c])
      if (--indeg[d] == 0) ready.push_back(d);
  }
  return order;
}

std::vector<VertexLengths> length_profile(const Quiver& q) {
  const auto part = sccs(q);
  const auto order = part.topological_order();
  const std::size_t n = q.vertex_count();
  std::vector<VertexLengths> result(n);

  // Cyclic components are absorbing for both directions; acyclic ones are single vertices.
  for (auto c : order) {
    const auto& comp = part.components[c];
    for (auto v : comp.vertices) {
      ExtLen best = comp.has_cycle ? ExtLen::infinity() : ExtLen(0);
      for (auto a : q.in_arrows(v)) {
        const auto& arr = q.arrow(a);
        if (part.component_of[arr.tail] != c) best = std::max(best, result[arr.tail].incoming + 1);
      }
      result[v].incoming = best;
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& comp = part.components[*it];
    for (auto v : comp.vertices) {
      ExtLen best = comp.has_cycle ? ExtLen::infinity() : ExtLen(0);
      for (auto a : q.out_arrows(v)) {
        const auto& arr = q.arrow(a);
        if (part.component_of[arr.head] != *it) best = std::max(best, result[arr.head].outgoing + 1);
      }
      result[v].outgoing = best;
    }
  }
  return result;
}

}  // namespace effdim
