#include "effdim/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_map>

namespace effdim {

__extension__ using u128 = unsigned __int128;

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::effective:
      return "effective";
    case VerifyStatus::collision:
      return "collision";
    case VerifyStatus::zero_action:
      return "zero_action";
    case VerifyStatus::relation_violation:
      return "relation_violation";
  }
  return "unknown";
}

namespace {

void check_shapes(std::span<const std::size_t> dims, std::span<const PolyMatrix> arrows, const Quiver& q) {
  if (dims.size() != q.vertex_count())
    throw std::invalid_argument("representation has " + std::to_string(dims.size()) + " vertex spaces, quiver has " +
                                std::to_string(q.vertex_count()) + " vertices");
  if (arrows.size() != q.arrow_count())
    throw std::invalid_argument("representation has " + std::to_string(arrows.size()) + " arrow matrices, quiver has " +
                                std::to_string(q.arrow_count()) + " arrows");
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (arrows[a].rows() != dims[arr.head] || arrows[a].cols() != dims[arr.tail])
      throw std::invalid_argument("matrix of arrow '" + arr.name + "' has the wrong shape");
  }
}

std::string canonical(const PolyMatrix& m) {
  std::string s = std::to_string(m.rows()) + "x" + std::to_string(m.cols());
  for (const auto& e : m.entries()) {
    s += '|';
    s += e.to_string();
  }
  return s;
}

Path path_of(const Quiver& q, std::span<const std::uint32_t> seq) {
  return Path::from_arrows(q, std::vector<ArrowId>(seq.begin(), seq.end()));
}

}  // namespace

VerifyReport verify_truncated(const GradedRep& rep, const Quiver& q, std::size_t truncation) {
  if (truncation < 1) throw ContractError("truncation level must be >= 1");
  if (rep.truncation != truncation)
    throw std::invalid_argument("representation was built for N=" + std::to_string(rep.truncation) + ", not N=" +
                                std::to_string(truncation));
  const auto dims = dims_of(rep);
  check_shapes(dims, rep.arrows, q);

  VerifyReport report;
  report.max_length = truncation - 1;
  report.checked = 1;  // z

  struct Item {
    Path path;
    PolyMatrix image;
  };
  std::unordered_map<std::string, Path> seen;
  auto fail = [&](VerifyStatus s, std::vector<Path> w) {
    report.status = s;
    report.witness = std::move(w);
    return report;
  };
  auto record = [&](const Path& p, const PolyMatrix& image) -> std::optional<VerifyReport> {
    ++report.checked;
    if (image.is_zero()) return fail(VerifyStatus::zero_action, {p});
    auto key = std::to_string(p.tail()) + ">" + std::to_string(p.head()) + ":" + canonical(image);
    auto [it, inserted] = seen.emplace(std::move(key), p);
    if (!inserted) return fail(VerifyStatus::collision, {it->second, p});
    return std::nullopt;
  };

  std::vector<Item> level;
  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    auto p = Path::trivial(x);
    if (auto r = record(p, PolyMatrix::identity(dims[x]))) return *r;
  }
  for (ArrowId a = 0; a < q.arrow_count(); ++a) level.push_back({Path::from_arrows(q, {a}), rep.arrows[a]});

  for (std::size_t len = 1; len <= truncation; ++len) {
    for (const auto& item : level) {
      if (len < truncation) {
        if (auto r = record(item.path, item.image)) return *r;
      } else if (!item.image.is_zero()) {
        return fail(VerifyStatus::relation_violation, {item.path});
      }
    }
    if (len == truncation) break;
    std::vector<Item> next;
    for (const auto& item : level)
      for (auto a : q.out_arrows(item.path.head())) {
        auto p = compose(Path::from_arrows(q, {a}), item.path);
        next.push_back({std::move(p), rep.arrows[a] * item.image});
      }
    level = std::move(next);
  }
  return report;
}

namespace {

constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;
constexpr std::size_t kLanes = 2;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % kModulus);
}

/// Arrow matrices evaluated at the fingerprint points; lane-major entries.
struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> v;  // [lane][r][c]
};

struct Failure {
  std::size_t level = 0;
  VerifyStatus status = VerifyStatus::effective;
  std::vector<Path> witness;
};

struct TailResult {
  std::size_t paths = 0;
  std::optional<Failure> failure;
};

TailResult verify_from_tail(const SymbolicRep& rep, const Quiver& q, const std::vector<ModMatrix>& fp_arrows,
                            VertexId tail, std::size_t max_len) {
  TailResult result;
  const std::size_t cols = rep.dims[tail];

  // One BFS level: arrow sequences, heads and fingerprints stored flat.
  struct Level {
    std::size_t len = 0;
    std::vector<std::uint32_t> arrows;
    std::vector<VertexId> heads;
    std::vector<std::size_t> fp_offset;
    std::vector<std::uint64_t> fp;
  };
  Level cur;
  cur.heads.push_back(tail);
  cur.fp_offset.push_back(0);
  for (std::size_t lane = 0; lane < kLanes; ++lane)
    for (std::size_t r = 0; r < cols; ++r)
      for (std::size_t c = 0; c < cols; ++c) cur.fp.push_back(r == c ? 1 : 0);

  for (std::size_t len = 1; len <= max_len; ++len) {
    Level next;
    next.len = len;
    for (std::size_t i = 0; i < cur.heads.size(); ++i) {
      const VertexId h = cur.heads[i];
      const std::size_t mid = rep.dims[h];
      const std::uint64_t* src = cur.fp.data() + cur.fp_offset[i];
      for (auto a : q.out_arrows(h)) {
        const auto& am = fp_arrows[a];
        next.arrows.insert(next.arrows.end(), cur.arrows.begin() + static_cast<std::ptrdiff_t>(i * cur.len),
                           cur.arrows.begin() + static_cast<std::ptrdiff_t>((i + 1) * cur.len));
        next.arrows.push_back(static_cast<std::uint32_t>(a));
        next.heads.push_back(q.arrow(a).head);
        next.fp_offset.push_back(next.fp.size());
        for (std::size_t lane = 0; lane < kLanes; ++lane)
          for (std::size_t r = 0; r < am.rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
              std::uint64_t acc = 0;
              for (std::size_t k = 0; k < mid; ++k)
                acc = (acc + mulmod(am.v[(lane * am.rows + r) * am.cols + k], src[(lane * mid + k) * cols + c])) %
                      kModulus;
              next.fp.push_back(acc);
            }
      }
    }
    cur = std::move(next);
    const std::size_t count = cur.heads.size();
    if (count == 0) break;
    result.paths += count;

    auto seq = [&](std::size_t i) {
      return std::span<const std::uint32_t>(cur.arrows.data() + i * len, len);
    };
    auto fp_size = [&](std::size_t i) { return kLanes * rep.dims[cur.heads[i]] * cols; };
    auto fp = [&](std::size_t i) { return std::span<const std::uint64_t>(cur.fp.data() + cur.fp_offset[i], fp_size(i)); };

    for (std::size_t i = 0; i < count; ++i) {
      auto f = fp(i);
      if (std::all_of(f.begin(), f.end(), [](auto v) { return v == 0; })) {
        auto p = path_of(q, seq(i));
        if (rep_of_path(rep, p).acts_as_zero()) {
          result.failure = Failure{len, VerifyStatus::zero_action, {p}};
          return result;
        }
      }
    }

    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    auto key_less = [&](std::size_t i, std::size_t j) {
      if (cur.heads[i] != cur.heads[j]) return cur.heads[i] < cur.heads[j];
      auto fi = fp(i), fj = fp(j);
      if (auto c = std::lexicographical_compare_three_way(fi.begin(), fi.end(), fj.begin(), fj.end()); c != 0)
        return c < 0;
      return i < j;
    };
    std::sort(order.begin(), order.end(), key_less);
    for (std::size_t s = 0; s + 1 < count; ++s) {
      const auto i = order[s];
      for (std::size_t t = s + 1; t < count; ++t) {
        const auto j = order[t];
        if (cur.heads[i] != cur.heads[j]) break;
        auto fi = fp(i), fj = fp(j);
        if (!std::equal(fi.begin(), fi.end(), fj.begin(), fj.end())) break;
        auto pi = path_of(q, seq(i)), pj = path_of(q, seq(j));
        if (rep_of_path(rep, pi) == rep_of_path(rep, pj)) {
          result.failure = Failure{len, VerifyStatus::collision, {pi, pj}};
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace

VerifyReport verify_path_rep(const SymbolicRep& rep, const Quiver& q, std::size_t max_len,
                             const VerifyOptions& options) {
  if (max_len < 1) throw ContractError("verify_path_rep needs max_len >= 1");
  check_shapes(rep.dims, rep.arrows, q);

  VerifyReport report;
  report.max_length = max_len;
  report.checked = 1;  // z
  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    ++report.checked;
    if (rep.dims[x] == 0) {
      report.status = VerifyStatus::zero_action;
      report.witness = {Path::trivial(x)};
      return report;
    }
  }

  // Random evaluation points, one independent set per lane.
  VarIndex max_var = 0;
  for (const auto& m : rep.arrows)
    for (const auto& e : m.entries())
      if (auto v = e.max_variable()) max_var = std::max(max_var, *v);
  std::mt19937_64 rng(options.seed);
  std::vector<std::vector<std::uint64_t>> points(kLanes, std::vector<std::uint64_t>(max_var + 1));
  for (auto& lane : points)
    for (auto& v : lane) v = 1 + rng() % (kModulus - 1);

  std::vector<ModMatrix> fp_arrows;
  for (const auto& m : rep.arrows) {
    ModMatrix mm{m.rows(), m.cols(), {}};
    for (std::size_t lane = 0; lane < kLanes; ++lane)
      for (const auto& e : m.entries()) mm.v.push_back(e.evaluate_mod(points[lane], kModulus));
    fp_arrows.push_back(std::move(mm));
  }

  std::vector<TailResult> results(q.vertex_count());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t x = next++; x < q.vertex_count(); x = next++)
      results[x] = verify_from_tail(rep, q, fp_arrows, x, max_len);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(q.vertex_count())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  const Failure* first = nullptr;
  for (const auto& r : results) {
    report.checked += r.paths;
    if (r.failure && (!first || r.failure->level < first->level)) first = &*r.failure;
  }
  if (first) {
    report.status = first->status;
    report.witness = first->witness;
  }
  return report;
}

VerifyReport verify_filtration(const GradedRep& rep, const Quiver& q) {
  const auto dims = dims_of(rep);
  check_shapes(dims, rep.arrows, q);
  VerifyReport report;
  report.max_length = 1;
  const std::size_t top = rep.truncation;

  for (VertexId x = 0; x < q.vertex_count(); ++x)
    for (const auto& label : rep.basis[x])
      if (label.grade && *label.grade >= top) {
        report.status = VerifyStatus::relation_violation;
        report.witness = {Path::trivial(x)};
        return report;
      }

  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& m = rep.arrows[a];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      ++report.checked;
      const auto& src = rep.basis[arr.tail][c];
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m(r, c).is_zero()) continue;
        const auto& dst = rep.basis[arr.head][r];
        if (src.grade && dst.grade && *dst.grade <= *src.grade) {
          report.status = VerifyStatus::relation_violation;
          report.witness = {Path::from_arrows(q, {a})};
          return report;
        }
      }
    }
  }
  return report;
}

namespace {

/// Square matrix over F_2 of size <= 4, bit (4*r + c) holds entry (r, c).
using BitMat = std::uint16_t;

BitMat bit_mul(BitMat a, BitMat b) {
  BitMat out = 0;
  for (int r = 0; r < 4; ++r) {
    std::uint16_t row = 0;
    for (int k = 0; k < 4; ++k)
      if (a >> (4 * r + k) & 1) row ^= (b >> (4 * k)) & 0xF;
    out |= static_cast<BitMat>(row << (4 * r));
  }
  return out;
}

void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                  const std::function<bool(const std::vector<std::size_t>&)>& visit, bool& stop) {
  if (stop) return;
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    stop = visit(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t k = 0; k <= total && !stop; ++k) {
    cur.push_back(k);
    compositions(total - k, parts, cur, visit, stop);
    cur.pop_back();
  }
}

}  // namespace

bool exhaustive_lower_bound_f2(const Quiver& q, std::size_t truncation, std::size_t total_dim) {
  if (truncation < 1) throw ContractError("truncation level must be >= 1");
  if (total_dim > 4 || q.arrow_count() * total_dim * total_dim > 20)
    throw GuardError("exhaustive F_2 search refused: needs total_dim <= 4 and arrows * total_dim^2 <= 20 (got " +
                     std::to_string(total_dim) + " and " + std::to_string(q.arrow_count() * total_dim * total_dim) +
                     ")");

  // Elements of P_N other than z, and the generators of J^N.
  const auto elements = enumerate_paths(q, truncation - 1);
  std::vector<std::vector<ArrowId>> killed;
  for_each_path_of_length(q, truncation, [&](std::span<const ArrowId> s) { killed.emplace_back(s.begin(), s.end()); });

  bool found = false;
  std::vector<std::size_t> cur;
  compositions(total_dim, q.vertex_count(), cur, [&](const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> offset(dims.size(), 0);
    for (std::size_t i = 1; i < dims.size(); ++i) offset[i] = offset[i - 1] + dims[i - 1];

    struct Bit {
      ArrowId arrow;
      std::size_t row, col;
    };
    std::vector<Bit> bits;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      const auto& arr = q.arrow(a);
      for (std::size_t r = 0; r < dims[arr.head]; ++r)
        for (std::size_t c = 0; c < dims[arr.tail]; ++c) bits.push_back({a, offset[arr.head] + r, offset[arr.tail] + c});
    }
    std::vector<BitMat> projector(q.vertex_count(), 0);
    for (VertexId x = 0; x < q.vertex_count(); ++x)
      for (std::size_t i = 0; i < dims[x]; ++i) projector[x] |= static_cast<BitMat>(1u << (4 * (offset[x] + i) + offset[x] + i));

    std::vector<BitMat> arrow_mat(q.arrow_count());
    std::vector<BitMat> images;
    auto image_of = [&](std::span<const ArrowId> seq) {
      BitMat m = arrow_mat[seq[0]];
      for (std::size_t i = 1; i < seq.size(); ++i) m = bit_mul(arrow_mat[seq[i]], m);
      return m;
    };
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits.size()); ++mask) {
      std::fill(arrow_mat.begin(), arrow_mat.end(), 0);
      for (std::size_t b = 0; b < bits.size(); ++b)
        if (mask >> b & 1) arrow_mat[bits[b].arrow] |= static_cast<BitMat>(1u << (4 * bits[b].row + bits[b].col));

      bool relations_hold = std::all_of(killed.begin(), killed.end(), [&](const auto& s) { return image_of(s) == 0; });
      if (!relations_hold) continue;
      images.assign(1, 0);  // z
      for (const auto& p : elements) images.push_back(p.is_trivial() ? projector[p.tail()] : image_of(p.arrows()));
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) == images.end()) {
        found = true;
        return true;
      }
    }
    return false;
  }, found);
  return found;
}

}  // namespace effdim
