#include "property_suites.hpp"

#include <algorithm>

#include "effdim/dimension.hpp"
#include "effdim/oracle.hpp"
#include "effdim/rep.hpp"
#include "support.hpp"

namespace effdim::testing {

namespace {

// Cycles at x, as traversal-order arrow words, of lengths 1..max_len.
std::vector<std::vector<ArrowId>> cycles_at(const Quiver& q, VertexId x, std::size_t max_len) {
  std::vector<std::vector<ArrowId>> out;
  for (std::size_t len = 1; len <= max_len; ++len)
    for_each_path_of_length(q, len, [&](std::span<const ArrowId> w) {
      if (q.arrow(w.front()).tail == x && q.arrow(w.back()).head == x) out.emplace_back(w.begin(), w.end());
    });
  return out;
}

bool is_first_return(const Quiver& q, VertexId x, const Path& p) {
  if (p.is_zero() || p.is_trivial() || p.tail() != x || p.head() != x) return false;
  const auto arrows = p.arrows();
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.arrow(arrows[i]).head == x) return false;
  return true;
}

// Number of ways to cut a cycle word into consecutive first-return blocks.
std::size_t count_factorizations(const Quiver& q, VertexId x, const std::vector<ArrowId>& w) {
  std::vector<std::size_t> ways(w.size() + 1, 0);
  ways[0] = 1;
  for (std::size_t end = 1; end <= w.size(); ++end)
    for (std::size_t start = 0; start < end; ++start) {
      if (ways[start] == 0) continue;
      std::vector<ArrowId> block(w.begin() + start, w.begin() + end);
      if (q.arrow(block.front()).tail != x) continue;
      if (is_first_return(q, x, Path::from_arrows(q, block))) ways[end] += ways[start];
    }
  return ways[w.size()];
}

}  // namespace

SuiteResult factorization_suite() {
  SuiteResult r;
  for (const auto& q : random_suite()) {
    for (VertexId x = 0; x < q.vertex_count(); ++x) {
      for (const auto& w : cycles_at(q, x, 5)) {
        ++r.checked;
        const auto p = Path::from_arrows(q, w);
        const auto factors = factorize_cycle(q, p);
        Path product = Path::trivial(x);
        bool blocks_ok = true;
        for (const auto& f : factors) {
          blocks_ok = blocks_ok && is_first_return(q, x, f);
          product = compose(product, f);
        }
        if (!blocks_ok || product != p)
          r.fail(describe(q) + ": bad factorization of " + to_string(q, p));
        else if (count_factorizations(q, x, w) != 1)
          r.fail(describe(q) + ": ambiguous factorization of " + to_string(q, p));
      }
    }
  }
  return r;
}

SuiteResult commutativity_suite() {
  SuiteResult r;
  for (const auto& q : random_suite()) {
    const std::size_t bound = 2 * q.vertex_count();
    for (VertexId x = 0; x < q.vertex_count(); ++x) {
      ++r.checked;
      const bool many = brute_first_returns(q, x, bound).size() >= 2;
      if (is_commutative_at(q, x) == many)
        r.fail(describe(q) + ": vertex " + q.vertex_name(x) + " misclassified");
    }
  }
  return r;
}

SuiteResult k_interval_suite() {
  SuiteResult r;
  for (const auto& q : random_suite()) {
    const auto lengths = brute_lengths(q);
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto prof = k_profile(q, n);
      for (VertexId x = 0; x < q.vertex_count(); ++x) {
        ++r.checked;
        const auto& l = prof.lengths[x];
        const bool in_ok = lengths[x].in ? l.incoming == ExtLen(*lengths[x].in) : l.incoming.is_infinite();
        const bool out_ok = lengths[x].out ? l.outgoing == ExtLen(*lengths[x].out) : l.outgoing.is_infinite();
        const auto ks = brute_k_set(q, x, n);
        bool k_ok;
        if (ks.empty()) {
          k_ok = !prof.k[x].has_value();
        } else {
          k_ok = prof.k[x] && prof.k[x]->lo == ks.front() && prof.k[x]->hi == ks.back() &&
                 prof.k[x]->size() == ks.size();
        }
        const bool d_ok = prof.d[x] == std::max<std::size_t>(ks.size(), 1);
        if (!in_ok || !out_ok || !k_ok || !d_ok)
          r.fail(describe(q) + ": vertex " + q.vertex_name(x) + " at N=" + std::to_string(n));
      }
    }
  }
  return r;
}

SuiteResult homogeneity_suite() {
  SuiteResult r;
  for (const auto& q : random_suite()) {
    const auto rep = build_path_rep(q);
    const std::size_t max_len = std::min<std::size_t>(2 * q.vertex_count() + 2, 6);
    for (const auto& p : enumerate_paths(q, max_len)) {
      ++r.checked;
      const auto img = rep_of_path(rep, p);
      const std::size_t len = *p.length();
      bool ok = !img.zero;
      for (std::size_t i = 0; ok && i < img.matrix.rows(); ++i)
        for (std::size_t j = 0; ok && j < img.matrix.cols(); ++j) {
          const auto h = img.matrix(i, j).homogeneity();
          ok = h.kind == Homogeneity::Kind::zero || (h.kind == Homogeneity::Kind::homogeneous && h.degree == len);
        }
      if (!ok) r.fail(describe(q) + ": image of " + to_string(q, p) + " is not homogeneous");
    }
  }
  return r;
}

SuiteResult filtration_suite() {
  SuiteResult r;
  for (const auto& q : random_suite()) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto rep = build_truncated_rep(q, n);
      ++r.checked;
      if (!verify_filtration(rep, q).effective()) {
        r.fail(describe(q) + ": verify_filtration rejects N=" + std::to_string(n));
        continue;
      }
      // Independent reading of the same law: graded column k feeds only rows of larger grade.
      for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const auto& m = rep.arrows[a];
        const auto& cols = rep.basis[q.arrow(a).tail];
        const auto& rows = rep.basis[q.arrow(a).head];
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && rows[i].grade && cols[j].grade && *rows[i].grade <= *cols[j].grade)
              r.fail(describe(q) + ": arrow " + q.arrow(a).name + " does not raise grade at N=" + std::to_string(n));
      }
    }
  }
  return r;
}

const std::vector<NamedSuite>& all_suites() {
  static const std::vector<NamedSuite> suites = {
      {"factorization", factorization_suite}, {"commutativity", commutativity_suite},
      {"k_interval", k_interval_suite},       {"homogeneity", homogeneity_suite},
      {"filtration", filtration_suite},
  };
  return suites;
}

}  // namespace effdim::testing
