#include "effdim/rep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <regex>

namespace effdim {

namespace {

constexpr const char* kind_names[] = {"tau", "eta", "zeta"};

}  // namespace

VariableNamer symbolic_namer(const Quiver& q) {
  return [&q](VarIndex v) {
    return std::string(kind_names[v % 3]) + "(" + q.arrow(v / 3).name + ")";
  };
}

std::optional<VarIndex> parse_symbolic_variable(const Quiver& q, std::string_view name) {
  static const std::regex re(R"(^(tau|eta|zeta)\(([A-Za-z0-9_]+)\)$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(name.begin(), name.end(), m, re)) return std::nullopt;
  auto a = q.find_arrow(m[2].str());
  if (!a) return std::nullopt;
  const std::string kind = m[1].str();
  const auto k = kind == "tau" ? VarKind::tau : kind == "eta" ? VarKind::eta : VarKind::zeta;
  return symbolic_variable(*a, k);
}

VariableNamer graded_namer(const Quiver& q, std::size_t truncation) {
  return [&q, truncation](VarIndex v) {
    return "lambda(" + q.arrow(v / truncation).name + "," + std::to_string(v % truncation) + ")";
  };
}

std::optional<VarIndex> parse_graded_variable(const Quiver& q, std::size_t truncation, std::string_view name) {
  static const std::regex re(R"(^lambda\(([A-Za-z0-9_]+),([0-9]+)\)$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(name.begin(), name.end(), m, re)) return std::nullopt;
  auto a = q.find_arrow(m[1].str());
  const auto k = std::stoull(m[2].str());
  if (!a || k >= truncation) return std::nullopt;
  return graded_variable(*a, k, truncation);
}

std::size_t SymbolicRep::total_dimension() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

SymbolicRep build_path_rep(const Quiver& q) {
  const auto cls = classify_path(q);
  SymbolicRep rep;
  for (VertexId x = 0; x < q.vertex_count(); ++x) rep.dims.push_back(cls.in_a[x] ? 2 : 1);

  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const auto tau = MultiPoly::variable(symbolic_variable(a, VarKind::tau));
    const auto eta = MultiPoly::variable(symbolic_variable(a, VarKind::eta));
    const auto zeta = MultiPoly::variable(symbolic_variable(a, VarKind::zeta));
    const bool tail_a = cls.in_a[arr.tail], head_a = cls.in_a[arr.head];
    if (tail_a && head_a)
      rep.arrows.emplace_back(2, 2, std::vector<MultiPoly>{tau, eta, MultiPoly(), zeta});
    else if (tail_a)
      rep.arrows.emplace_back(1, 2, std::vector<MultiPoly>{tau, zeta});
    else if (head_a)
      rep.arrows.emplace_back(2, 1, std::vector<MultiPoly>{tau, zeta});
    else
      rep.arrows.emplace_back(1, 1, std::vector<MultiPoly>{tau});
  }
  return rep;
}

PolyMatrix letter_matrix(ArrowId letter) {
  return PolyMatrix(2, 2,
                    {MultiPoly::variable(symbolic_variable(letter, VarKind::tau)),
                     MultiPoly::variable(symbolic_variable(letter, VarKind::eta)), MultiPoly(),
                     MultiPoly::variable(symbolic_variable(letter, VarKind::zeta))});
}

MultiPoly lemma3_entry(std::span<const ArrowId> word) {
  if (word.empty()) throw ContractError("lemma3_entry needs a nonempty word");
  MultiPoly sum;
  for (std::size_t i = 0; i < word.size(); ++i) {
    std::vector<Monomial::Factor> factors;
    for (std::size_t j = 0; j < i; ++j) factors.push_back({symbolic_variable(word[j], VarKind::tau), 1});
    factors.push_back({symbolic_variable(word[i], VarKind::eta), 1});
    for (std::size_t j = i + 1; j < word.size(); ++j) factors.push_back({symbolic_variable(word[j], VarKind::zeta), 1});
    sum += MultiPoly::term(1, Monomial::from_factors(std::move(factors)));
  }
  return sum;
}

std::vector<Integer> first_primes(std::size_t count) {
  std::vector<Integer> out;
  if (count == 0) return out;
  // Rosser's bound p_n < n (ln n + ln ln n) for n >= 6.
  const double n = static_cast<double>(std::max<std::size_t>(count, 6));
  auto limit = static_cast<std::size_t>(n * (std::log(n) + std::log(std::log(n)))) + 1;
  std::vector<bool> composite(limit + 1, false);
  for (std::size_t i = 2; i <= limit && out.size() < count; ++i) {
    if (composite[i]) continue;
    out.emplace_back(i);
    for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::vector<Integer>> allocate_primes(const Quiver& q, std::size_t truncation) {
  if (truncation < 1) throw ContractError("truncation level must be >= 1");
  const auto primes = first_primes(q.arrow_count() * truncation);
  std::vector<std::vector<Integer>> table(q.arrow_count());
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    table[a].assign(primes.begin() + static_cast<std::ptrdiff_t>(a * truncation),
                    primes.begin() + static_cast<std::ptrdiff_t>((a + 1) * truncation));
  return table;
}

std::string to_string(const Quiver& q, const BasisLabel& label) {
  std::string s = "v_" + q.vertex_name(label.vertex);
  if (label.grade) s += "^(" + std::to_string(*label.grade) + ")";
  return s;
}

std::size_t GradedRep::total_dimension() const {
  std::size_t total = 0;
  for (const auto& b : basis) total += b.size();
  return total;
}

std::vector<std::size_t> dims_of(const GradedRep& rep) {
  std::vector<std::size_t> dims;
  for (const auto& b : rep.basis) dims.push_back(b.size());
  return dims;
}

GradedRep build_truncated_rep(const Quiver& q, std::size_t truncation, LabelField labels) {
  LabelTable table(q.arrow_count());
  if (labels == LabelField::primes) {
    const auto primes = allocate_primes(q, truncation);
    for (ArrowId a = 0; a < q.arrow_count(); ++a)
      for (const auto& p : primes[a]) table[a].emplace_back(p);
  } else {
    for (ArrowId a = 0; a < q.arrow_count(); ++a)
      for (std::size_t k = 0; k < truncation; ++k)
        table[a].push_back(MultiPoly::variable(graded_variable(a, k, truncation)));
  }
  return build_truncated_rep(q, truncation, table, labels);
}

GradedRep build_truncated_rep(const Quiver& q, std::size_t truncation, const LabelTable& table, LabelField labels) {
  const auto kp = k_profile(q, truncation);
  if (table.size() != q.arrow_count()) throw ContractError("label table must have one row per arrow");
  for (const auto& row : table)
    if (row.size() != truncation) throw ContractError("label table rows must have one entry per grade");

  GradedRep rep;
  rep.truncation = truncation;
  rep.labels = labels;
  rep.label_table = table;
  rep.basis.resize(q.vertex_count());
  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    if (const auto& k = kp.k[x])
      for (std::size_t g = k->lo; g <= k->hi; ++g) rep.basis[x].push_back({x, g});
    else
      rep.basis[x].push_back({x, std::nullopt});
  }

  // Position of grade g inside V_x (K(x) is an interval, so offset by its minimum).
  auto slot = [&](VertexId x, std::size_t g) { return g - kp.k[x]->lo; };

  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& kx = kp.k[arr.tail];
    const auto& ky = kp.k[arr.head];
    PolyMatrix m(rep.dim(arr.head), rep.dim(arr.tail));
    if (kx && ky) {
      for (std::size_t k = kx->lo; k <= kx->hi; ++k) {
        if (k + 1 == truncation) continue;  // top grade is killed
        // Smallest grade of V_y above k.
        std::optional<std::size_t> j;
        for (std::size_t i = k + 1; i < truncation; ++i)
          if (ky->contains(i)) {
            j = i;
            break;
          }
        if (!j)
          throw std::logic_error("no target grade above " + std::to_string(k) + " for arrow '" + arr.name + "'");
        m(slot(arr.head, *j), slot(arr.tail, k)) = table[a][k];
      }
    } else if (kx) {
      for (std::size_t k = kx->lo; k <= kx->hi; ++k) m(0, slot(arr.tail, k)) = table[a][k];
    } else if (ky) {
      m(slot(arr.head, ky->lo), 0) = table[a][0];
    } else {
      m(0, 0) = table[a][0];
    }
    rep.arrows.push_back(std::move(m));
  }
  return rep;
}

RepImage rep_of_path(std::span<const std::size_t> dims, std::span<const PolyMatrix> arrows, const Path& p) {
  RepImage img;
  if (p.is_zero()) return img;
  img.zero = false;
  img.tail = p.tail();
  img.head = p.head();
  if (p.is_trivial()) {
    img.matrix = PolyMatrix::identity(dims[p.tail()]);
    return img;
  }
  auto seq = p.arrows();
  img.matrix = arrows[seq[0]];
  for (std::size_t i = 1; i < seq.size(); ++i) img.matrix = arrows[seq[i]] * img.matrix;
  return img;
}

RepImage rep_of_path(const SymbolicRep& rep, const Path& p) { return rep_of_path(rep.dims, rep.arrows, p); }

RepImage rep_of_path(const GradedRep& rep, const Path& p) {
  const auto dims = dims_of(rep);
  return rep_of_path(dims, rep.arrows, p);
}

}  // namespace effdim
