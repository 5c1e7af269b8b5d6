#include "effdim/dimension.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "effdim/path.hpp"

namespace effdim {

PathClassification classify_path(const Quiver& q) {
  const auto part = sccs(q);
  PathClassification c;
  c.in_a.assign(q.vertex_count(), false);
  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    const auto& comp = part.components[part.component_of[x]];
    const bool noncommutative = comp.has_cycle && !comp.is_simple_cycle;
    c.in_a[x] = noncommutative;
    (noncommutative ? c.a : c.b).push_back(x);
  }
  return c;
}

std::size_t effdim_path(const Quiver& q) { return classify_path(q).a.size() + q.vertex_count(); }

std::optional<KInterval> k_interval(ExtLen l_minus, ExtLen l_plus, std::size_t truncation) {
  if (truncation < 1) throw ContractError("truncation level must be >= 1");
  const std::size_t top = truncation - 1;
  const std::size_t hi = l_minus.is_infinite() ? top : std::min<std::size_t>(top, l_minus.value());
  const std::size_t lo = (l_plus.is_infinite() || l_plus.value() >= top) ? 0 : top - l_plus.value();
  if (lo > hi) return std::nullopt;
  return KInterval{lo, hi};
}

std::size_t d_value(ExtLen l_minus, ExtLen l_plus, std::size_t truncation) {
  if (truncation < 1) throw ContractError("truncation level must be >= 1");
  const ExtLen n(truncation);
  const ExtLen sum = l_minus + l_plus + 2;
  const ExtLen excess =
      sum.is_infinite() ? sum : ExtLen(sum.value() > truncation ? sum.value() - truncation : 0);
  const ExtLen clipped = std::max(excess, ExtLen(1));
  return std::min({l_minus + 1, l_plus + 1, n, clipped}).value();
}

std::size_t KProfile::total() const { return std::accumulate(d.begin(), d.end(), std::size_t{0}); }

KProfile k_profile(const Quiver& q, std::size_t truncation) {
  if (truncation < 1) throw ContractError("truncation level must be >= 1");
  KProfile kp;
  kp.truncation = truncation;
  kp.lengths = length_profile(q);
  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    const auto& l = kp.lengths[x];
    auto k = k_interval(l.incoming, l.outgoing, truncation);
    kp.k.push_back(k);
    kp.d.push_back(d_value(l.incoming, l.outgoing, truncation));
    (k ? kp.a_n : kp.b_n).push_back(x);
  }
  return kp;
}

std::size_t effdim_truncated(const Quiver& q, std::size_t truncation) {
  if (truncation < 1) throw ContractError("truncation level must be >= 1");
  std::size_t total = 0;
  for (const auto& l : length_profile(q)) total += d_value(l.incoming, l.outgoing, truncation);
  return total;
}

Stabilization stabilization(const Quiver& q) {
  Stabilization s;
  s.threshold = q.vertex_count();
  for (const auto& l : length_profile(q)) {
    const bool fin_in = l.incoming.is_finite(), fin_out = l.outgoing.is_finite();
    if (!fin_in && !fin_out)
      ++s.a;
    else if (fin_in && fin_out)
      ++s.b;
    else
      s.b += std::min(l.incoming, l.outgoing).value() + 1;
  }
  return s;
}

std::size_t an_closed_form(std::span<const std::size_t> segments, std::size_t truncation) {
  if (truncation < 1) throw ContractError("truncation level must be >= 1");
  if (segments.empty()) throw ContractError("an_closed_form needs at least one segment");
  for (auto s : segments) {
    if (s == 0) throw ContractError("segment sizes must be positive");
    if (segments.size() > 1 && s < 2) throw ContractError("segments of a multi-segment quiver need >= 2 vertices");
  }
  const std::size_t big_n = truncation;
  std::size_t total = 1;
  for (auto ni : segments) {
    if (big_n < ni)
      total += big_n * (ni + 1 - big_n) - 1;
    else
      total += ni - 1;
  }
  return total;
}

std::optional<std::vector<std::size_t>> an_segments(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (q.arrow_count() + 1 != n) return std::nullopt;
  std::vector<std::vector<std::pair<VertexId, bool>>> adj(n);  // (neighbour, arrow points forward)
  std::set<std::pair<VertexId, VertexId>> edges;
  for (const auto& a : q.arrows()) {
    if (a.tail == a.head) return std::nullopt;
    if (!edges.emplace(std::min(a.tail, a.head), std::max(a.tail, a.head)).second) return std::nullopt;
    adj[a.tail].push_back({a.head, true});
    adj[a.head].push_back({a.tail, false});
  }
  if (n == 1) return std::vector<std::size_t>{1};
  VertexId start = n;
  for (VertexId v = 0; v < n; ++v) {
    if (adj[v].size() > 2) return std::nullopt;
    if (adj[v].size() == 1 && start == n) start = v;
  }
  if (start == n) return std::nullopt;

  std::vector<bool> directions;
  VertexId prev = n, cur = start;
  while (true) {
    auto it = std::find_if(adj[cur].begin(), adj[cur].end(), [&](auto& e) { return e.first != prev; });
    if (it == adj[cur].end()) break;
    directions.push_back(it->second);
    prev = cur;
    cur = it->first;
    if (directions.size() > n) return std::nullopt;
  }
  if (directions.size() + 1 != n) return std::nullopt;  // disconnected

  std::vector<std::size_t> segments{2};
  for (std::size_t i = 1; i < directions.size(); ++i) {
    if (directions[i] == directions[i - 1])
      ++segments.back();
    else
      segments.push_back(2);
  }
  return segments;
}

}  // namespace effdim
