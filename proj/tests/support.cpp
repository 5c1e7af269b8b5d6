#include "support.hpp"

#include <random>
#include <sstream>

namespace effdim::testing {

Quiver make_quiver(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Arrow> as;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    as.push_back({"a" + std::to_string(i), arrows[i].first, arrows[i].second});
  return Quiver(std::move(names), std::move(as));
}

std::vector<Quiver> random_suite(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Quiver> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % 5;
    const std::size_t m = rng() % 8;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t t = rng() % n;
      const std::size_t h = rng() % n;
      arrows.emplace_back(t, h);
    }
    out.push_back(make_quiver(n, arrows));
  }
  return out;
}

std::vector<Quiver> line_orientations(std::size_t n) {
  std::vector<Quiver> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (std::size_t i = 0; i + 1 < n; ++i)
      arrows.push_back((mask >> i) & 1 ? std::pair{i + 1, i} : std::pair{i, i + 1});
    out.push_back(make_quiver(n, arrows));
  }
  return out;
}

std::vector<BoolMatrix> reach_by_length(const Quiver& q, std::size_t max_len) {
  const std::size_t n = q.vertex_count();
  BoolMatrix step(n, std::vector<bool>(n, false));
  for (const auto& a : q.arrows()) step[a.tail][a.head] = true;
  std::vector<BoolMatrix> out;
  BoolMatrix cur(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) cur[i][i] = true;
  out.push_back(cur);
  for (std::size_t k = 1; k <= max_len; ++k) {
    BoolMatrix next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (cur[i][j])
          for (std::size_t l = 0; l < n; ++l)
            if (step[j][l]) next[i][l] = true;
    cur = std::move(next);
    out.push_back(cur);
  }
  return out;
}

std::vector<BruteLengths> brute_lengths(const Quiver& q) {
  // A path with n arrows repeats a vertex, so it can be pumped forever.
  const std::size_t n = q.vertex_count();
  const auto reach = reach_by_length(q, n);
  std::vector<BruteLengths> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t k = 0; k <= n; ++k) {
      bool into = false, from = false;
      for (std::size_t y = 0; y < n; ++y) {
        into = into || reach[k][y][x];
        from = from || reach[k][x][y];
      }
      if (into) out[x].in = k == n ? std::nullopt : std::optional<std::size_t>(k);
      if (from) out[x].out = k == n ? std::nullopt : std::optional<std::size_t>(k);
    }
  }
  return out;
}

std::vector<std::size_t> brute_k_set(const Quiver& q, VertexId x, std::size_t truncation) {
  const std::size_t n = q.vertex_count();
  const auto reach = reach_by_length(q, truncation);
  auto any_into = [&](std::size_t k) {
    for (std::size_t y = 0; y < n; ++y)
      if (reach[k][y][x]) return true;
    return false;
  };
  auto any_from = [&](std::size_t k) {
    for (std::size_t y = 0; y < n; ++y)
      if (reach[k][x][y]) return true;
    return false;
  };
  std::vector<std::size_t> ks;
  for (std::size_t k = 0; k < truncation; ++k)
    if (any_into(k) && any_from(truncation - 1 - k)) ks.push_back(k);
  return ks;
}

std::size_t brute_effdim_truncated(const Quiver& q, std::size_t truncation) {
  std::size_t total = 0;
  for (VertexId x = 0; x < q.vertex_count(); ++x)
    total += std::max<std::size_t>(brute_k_set(q, x, truncation).size(), 1);
  return total;
}

std::vector<std::vector<ArrowId>> brute_first_returns(const Quiver& q, VertexId x, std::size_t max_len) {
  std::vector<std::vector<ArrowId>> out;
  std::vector<ArrowId> word;
  auto dfs = [&](auto&& self, VertexId at) -> void {
    if (word.size() == max_len) return;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      if (q.arrow(a).tail != at) continue;
      word.push_back(a);
      if (q.arrow(a).head == x)
        out.push_back(word);
      else
        self(self, q.arrow(a).head);
      word.pop_back();
    }
  };
  dfs(dfs, x);
  return out;
}

std::string describe(const Quiver& q) {
  std::ostringstream s;
  s << q.vertex_count() << " vertices:";
  for (const auto& a : q.arrows()) s << ' ' << a.tail << "->" << a.head;
  return s.str();
}

}  // namespace effdim::testing
