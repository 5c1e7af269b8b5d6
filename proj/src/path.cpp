#include "effdim/path.hpp"

#include <algorithm>
#include <sstream>

namespace effdim {

Path Path::trivial(VertexId x) {
  Path p;
  p.kind_ = Kind::trivial;
  p.tail_ = p.head_ = x;
  return p;
}

Path Path::from_arrows(const Quiver& q, std::vector<ArrowId> arrows) {
  if (arrows.empty()) throw ContractError("Path::from_arrows needs at least one arrow");
  for (auto a : arrows)
    if (a >= q.arrow_count()) throw ContractError("arrow index out of range");
  for (std::size_t i = 1; i < arrows.size(); ++i)
    if (q.arrow(arrows[i - 1]).head != q.arrow(arrows[i]).tail)
      throw ContractError("arrows '" + q.arrow(arrows[i - 1]).name + "' and '" + q.arrow(arrows[i]).name +
                          "' are not composable");
  Path p;
  p.kind_ = Kind::arrows;
  p.tail_ = q.arrow(arrows.front()).tail;
  p.head_ = q.arrow(arrows.back()).head;
  p.arrows_ = std::move(arrows);
  return p;
}

std::optional<std::size_t> Path::length() const {
  if (kind_ == Kind::zero) return std::nullopt;
  return arrows_.size();
}

VertexId Path::tail() const {
  if (kind_ == Kind::zero) throw ContractError("the zero path has no tail");
  return tail_;
}

VertexId Path::head() const {
  if (kind_ == Kind::zero) throw ContractError("the zero path has no head");
  return head_;
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
  if (auto c = a.arrows_.size() <=> b.arrows_.size(); c != 0) return c;
  if (auto c = a.tail_ <=> b.tail_; c != 0) return c;
  if (auto c = a.head_ <=> b.head_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.arrows_.begin(), a.arrows_.end(), b.arrows_.begin(),
                                                b.arrows_.end());
}

std::size_t PathHash::operator()(const Path& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.kind()) * 0x9e3779b97f4a7c15ULL;
  if (!p.is_zero()) h ^= (p.tail() + 0x632be59bd9b4e019ULL) + (h << 6) + (h >> 2);
  for (auto a : p.arrows()) h ^= (a + 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
  return h;
}

Path compose(const Path& p, const Path& q) {
  if (p.is_zero() || q.is_zero()) return Path::zero();
  if (q.head() != p.tail()) return Path::zero();
  if (q.is_trivial()) return p;
  if (p.is_trivial()) return q;
  Path r = q;
  r.head_ = p.head_;
  r.arrows_.insert(r.arrows_.end(), p.arrows_.begin(), p.arrows_.end());
  return r;
}

std::string to_string(const Quiver& q, const Path& p) {
  if (p.is_zero()) return "z";
  if (p.is_trivial()) return "e(" + q.vertex_name(p.tail()) + ")";
  std::string out;
  auto arrows = p.arrows();
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += q.arrow(*it).name;
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Path parse_path(const Quiver& q, std::string_view text) {
  text = trim(text);
  if (text == "z") return Path::zero();
  if (text.size() > 3 && text.substr(0, 2) == "e(" && text.back() == ')') {
    auto name = trim(text.substr(2, text.size() - 3));
    auto v = q.find_vertex(name);
    if (!v) throw std::invalid_argument("unknown vertex '" + std::string(name) + "' in path");
    return Path::trivial(*v);
  }
  std::vector<ArrowId> written;
  std::size_t pos = 0;
  while (true) {
    auto star = text.find('*', pos);
    auto name = trim(text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    auto a = q.find_arrow(name);
    if (!a) throw std::invalid_argument("unknown arrow '" + std::string(name) + "' in path");
    written.push_back(*a);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  std::reverse(written.begin(), written.end());
  try {
    return Path::from_arrows(q, std::move(written));
  } catch (const ContractError& e) {
    throw std::invalid_argument(e.what());
  }
}

void for_each_path_of_length(const Quiver& q, std::size_t len,
                             const std::function<void(std::span<const ArrowId>)>& visit) {
  if (len == 0) throw ContractError("for_each_path_of_length needs len >= 1");
  std::vector<ArrowId> seq;
  seq.reserve(len);
  std::function<void()> extend = [&] {
    if (seq.size() == len) {
      visit(seq);
      return;
    }
    for (auto a : q.out_arrows(q.arrow(seq.back()).head)) {
      seq.push_back(a);
      extend();
      seq.pop_back();
    }
  };
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    seq.push_back(a);
    extend();
    seq.pop_back();
  }
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len) {
  std::vector<Path> out;
  for (VertexId x = 0; x < q.vertex_count(); ++x) out.push_back(Path::trivial(x));
  for (std::size_t len = 1; len <= max_len; ++len) {
    bool any = false;
    for_each_path_of_length(q, len, [&](std::span<const ArrowId> seq) {
      any = true;
      out.push_back(Path::from_arrows(q, {seq.begin(), seq.end()}));
    });
    if (!any) break;
  }
  return out;
}

std::optional<std::size_t> longest_first_return(const Quiver& q, VertexId x) {
  const std::size_t n = q.vertex_count();
  bool has_loop = false;
  std::vector<bool> is_start(n, false), is_end(n, false);
  for (auto a : q.out_arrows(x)) {
    if (q.arrow(a).head == x)
      has_loop = true;
    else
      is_start[q.arrow(a).head] = true;
  }
  for (auto a : q.in_arrows(x))
    if (q.arrow(a).tail != x) is_end[q.arrow(a).tail] = true;

  // Restrict to the part of Q \ {x} lying on some route start -> end.
  auto reach = [&](const std::vector<bool>& seeds, bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<VertexId> todo;
    for (VertexId v = 0; v < n; ++v)
      if (seeds[v]) seen[v] = true, todo.push_back(v);
    while (!todo.empty()) {
      auto v = todo.back();
      todo.pop_back();
      for (auto a : forward ? q.out_arrows(v) : q.in_arrows(v)) {
        auto w = forward ? q.arrow(a).head : q.arrow(a).tail;
        if (w == x || seen[w]) continue;
        seen[w] = true;
        todo.push_back(w);
      }
    }
    return seen;
  };
  auto fwd = reach(is_start, true);
  auto bwd = reach(is_end, false);
  std::vector<bool> inside(n);
  for (VertexId v = 0; v < n; ++v) inside[v] = v != x && fwd[v] && bwd[v];

  // Longest route to an end vertex; a cycle inside the region makes M_x infinite.
  enum class Mark { white, grey, black };
  std::vector<Mark> mark(n, Mark::white);
  std::vector<long> best(n, -1);
  bool cyclic = false;
  std::function<void(VertexId)> visit = [&](VertexId v) {
    mark[v] = Mark::grey;
    long b = is_end[v] ? 0 : -1;
    for (auto a : q.out_arrows(v)) {
      auto w = q.arrow(a).head;
      if (!inside[w]) continue;
      if (mark[w] == Mark::grey) {
        cyclic = true;
        continue;
      }
      if (mark[w] == Mark::white) visit(w);
      if (best[w] >= 0) b = std::max(b, best[w] + 1);
    }
    best[v] = b;
    mark[v] = Mark::black;
  };
  std::size_t longest = has_loop ? 1 : 0;
  for (VertexId s = 0; s < n; ++s) {
    if (!is_start[s] || !inside[s]) continue;
    if (mark[s] == Mark::white) visit(s);
    if (best[s] >= 0) longest = std::max(longest, static_cast<std::size_t>(best[s]) + 2);
  }
  if (cyclic) return std::nullopt;
  return longest;
}

CycleBasis first_return_cycles(const Quiver& q, VertexId x, std::size_t max_len) {
  if (max_len < 1) throw ContractError("first_return_cycles needs max_len >= 1");
  if (x >= q.vertex_count()) throw ContractError("vertex index out of range");
  CycleBasis basis;
  basis.vertex = x;
  std::vector<ArrowId> seq;
  std::function<void(VertexId)> walk = [&](VertexId v) {
    for (auto a : q.out_arrows(v)) {
      seq.push_back(a);
      if (q.arrow(a).head == x)
        basis.cycles.push_back(Path::from_arrows(q, seq));
      else if (seq.size() < max_len)
        walk(q.arrow(a).head);
      seq.pop_back();
    }
  };
  walk(x);
  std::sort(basis.cycles.begin(), basis.cycles.end());
  auto longest = longest_first_return(q, x);
  basis.complete = longest.has_value() && *longest <= max_len;
  return basis;
}

std::vector<Path> factorize_cycle(const Quiver& q, const Path& p) {
  if (p.is_zero() || p.tail() != p.head()) throw ContractError("factorize_cycle expects a cycle");
  const VertexId x = p.tail();
  std::vector<Path> factors;
  std::vector<ArrowId> current;
  for (auto a : p.arrows()) {
    current.push_back(a);
    if (q.arrow(a).head == x) {
      factors.push_back(Path::from_arrows(q, std::move(current)));
      current.clear();
    }
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

bool is_commutative_at(const Quiver& q, VertexId x) {
  const auto part = sccs(q);
  const auto& comp = part.components.at(part.component_of.at(x));
  return !(comp.has_cycle && !comp.is_simple_cycle);
}

}  // namespace effdim
