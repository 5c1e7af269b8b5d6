#include "effdim/json_io.hpp"

#include <limits>

namespace effdim {

json to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"id", a.name}, {"tail", q.vertex_name(a.tail)}, {"head", q.vertex_name(a.head)}});
  return {{"vertices", q.vertices()}, {"arrows", std::move(arrows)}};
}

json to_json(const Quiver& q, const SccPartition& part) {
  json comps = json::array();
  for (std::size_t c = 0; c < part.components.size(); ++c) {
    const auto& comp = part.components[c];
    json names = json::array();
    for (auto v : comp.vertices) names.push_back(q.vertex_name(v));
    comps.push_back({{"id", c},
                     {"vertices", std::move(names)},
                     {"internal_arrows", comp.internal_arrows},
                     {"has_cycle", comp.has_cycle},
                     {"is_simple_cycle", comp.is_simple_cycle}});
  }
  json edges = json::array();
  for (auto [from, to] : part.condensation) edges.push_back({from, to});
  return {{"components", std::move(comps)}, {"condensation", std::move(edges)}};
}

json to_json(ExtLen e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

ExtLen ext_len_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtLen::infinity();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return ExtLen(j.get<std::uint64_t>());
  throw std::invalid_argument("expected a non-negative integer or \"inf\"");
}

json to_json(const MultiPoly& p, const VariableNamer& name) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json exps = json::array();
    for (auto [v, e] : it->first.factors()) exps.push_back({name(v), e});
    terms.push_back({{"coeff", it->second.str()}, {"exps", std::move(exps)}});
  }
  return terms;
}

MultiPoly poly_from_json(const json& j, const VariableParser& parse) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of terms");
  MultiPoly p;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exps"))
      throw std::invalid_argument("polynomial term needs 'coeff' and 'exps'");
    Integer c;
    try {
      c = Integer(t.at("coeff").get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("coefficient must be a decimal string");
    }
    std::vector<Monomial::Factor> factors;
    for (const auto& e : t.at("exps")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("exponent entries are [name, exponent] pairs");
      auto v = parse(e[0].get<std::string>());
      if (!v) throw std::invalid_argument("unknown variable '" + e[0].get<std::string>() + "'");
      factors.push_back({*v, e[1].get<std::uint32_t>()});
    }
    p += MultiPoly::term(std::move(c), Monomial::from_factors(std::move(factors)));
  }
  return p;
}

namespace {

json matrix_json(const PolyMatrix& m, const std::function<json(const MultiPoly&)>& entry) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Integers become JSON numbers when they fit in 64 bits, else decimal strings.
json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json arrow_entry(const Quiver& q, ArrowId a, const PolyMatrix& m, const std::function<json(const MultiPoly&)>& entry) {
  const auto& arr = q.arrow(a);
  return {{"id", arr.name},
          {"tail", q.vertex_name(arr.tail)},
          {"head", q.vertex_name(arr.head)},
          {"shape", {m.rows(), m.cols()}},
          {"matrix", matrix_json(m, entry)}};
}

json dims_json(const Quiver& q, std::span<const std::size_t> dims) {
  json out = json::array();
  for (VertexId x = 0; x < q.vertex_count(); ++x) out.push_back({{"vertex", q.vertex_name(x)}, {"dim", dims[x]}});
  return out;
}

MultiPoly entry_from_json(const json& e, const VariableParser& parse) {
  if (e.is_number_integer()) return MultiPoly(Integer(e.get<std::int64_t>()));
  if (e.is_string()) {
    try {
      return MultiPoly(Integer(e.get<std::string>()));
    } catch (const std::exception&) {
      throw std::invalid_argument("matrix entry '" + e.get<std::string>() + "' is not an integer");
    }
  }
  return poly_from_json(e, parse);
}

std::vector<PolyMatrix> arrows_from_json(const Quiver& q, const json& j, std::span<const std::size_t> dims,
                                         const VariableParser& parse) {
  const auto& arr_j = j.at("arrows");
  if (arr_j.size() != q.arrow_count()) throw std::invalid_argument("representation arrow count does not match quiver");
  std::vector<PolyMatrix> out;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& e = arr_j[a];
    if (e.at("id").get<std::string>() != q.arrow(a).name)
      throw std::invalid_argument("representation arrow #" + std::to_string(a) + " is '" + e.at("id").get<std::string>() +
                                  "', expected '" + q.arrow(a).name + "'");
    if (e.at("tail").get<std::string>() != q.vertex_name(q.arrow(a).tail) ||
        e.at("head").get<std::string>() != q.vertex_name(q.arrow(a).head))
      throw std::invalid_argument("endpoints of arrow '" + q.arrow(a).name + "' do not match the quiver");
    const std::size_t rows = dims[q.arrow(a).head], cols = dims[q.arrow(a).tail];
    if (e.at("shape") != json::array({rows, cols}))
      throw std::invalid_argument("declared shape of arrow '" + q.arrow(a).name + "' does not match vertex_dims");
    const auto& mj = e.at("matrix");
    if (mj.size() != rows) throw std::invalid_argument("matrix of arrow '" + q.arrow(a).name + "' has the wrong shape");
    std::vector<MultiPoly> entries;
    for (const auto& row : mj) {
      if (row.size() != cols)
        throw std::invalid_argument("matrix of arrow '" + q.arrow(a).name + "' has the wrong shape");
      for (const auto& x : row) entries.push_back(entry_from_json(x, parse));
    }
    out.emplace_back(rows, cols, std::move(entries));
  }
  return out;
}

std::vector<std::size_t> dims_from_json(const Quiver& q, const json& j) {
  const auto& dj = j.at("vertex_dims");
  if (dj.size() != q.vertex_count()) throw std::invalid_argument("representation vertex count does not match quiver");
  std::vector<std::size_t> dims;
  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    if (dj[x].at("vertex").get<std::string>() != q.vertex_name(x))
      throw std::invalid_argument("representation vertex order does not match quiver");
    dims.push_back(dj[x].at("dim").get<std::size_t>());
  }
  return dims;
}

}  // namespace

json to_json(const Quiver& q, const SymbolicRep& rep) {
  const auto namer = symbolic_namer(q);
  json arrows = json::array();
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    arrows.push_back(arrow_entry(q, a, rep.arrows[a], [&](const MultiPoly& p) { return to_json(p, namer); }));
  return {{"kind", "path"},
          {"vertex_dims", dims_json(q, rep.dims)},
          {"total_dimension", rep.total_dimension()},
          {"arrows", std::move(arrows)}};
}

json to_json(const Quiver& q, const GradedRep& rep) {
  const auto namer = graded_namer(q, rep.truncation);
  auto entry = [&](const MultiPoly& p) -> json {
    if (auto c = p.constant_value()) return integer_json(*c);
    return to_json(p, namer);
  };
  json basis = json::array();
  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    json labels = json::array();
    for (const auto& l : rep.basis[x])
      labels.push_back({{"name", to_string(q, l)}, {"grade", l.grade ? json(*l.grade) : json(nullptr)}});
    basis.push_back({{"vertex", q.vertex_name(x)}, {"labels", std::move(labels)}});
  }
  json arrows = json::array();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) arrows.push_back(arrow_entry(q, a, rep.arrows[a], entry));
  json table = json::array();
  for (ArrowId a = 0; a < rep.label_table.size(); ++a)
    for (std::size_t k = 0; k < rep.label_table[a].size(); ++k)
      table.push_back({{"arrow", q.arrow(a).name}, {"k", k}, {"value", entry(rep.label_table[a][k])}});
  const auto dims = dims_of(rep);
  return {{"kind", "truncated"},
          {"truncation", rep.truncation},
          {"labels", rep.labels == LabelField::primes ? "primes" : "transcendental"},
          {"vertex_dims", dims_json(q, dims)},
          {"total_dimension", rep.total_dimension()},
          {"basis_labels", std::move(basis)},
          {"arrows", std::move(arrows)},
          {"prime_table", std::move(table)}};
}

AnyRep rep_from_json(const Quiver& q, const json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    const auto dims = dims_from_json(q, j);
    if (kind == "path") {
      SymbolicRep rep;
      rep.dims = dims;
      rep.arrows = arrows_from_json(q, j, dims, [&](std::string_view n) { return parse_symbolic_variable(q, n); });
      return rep;
    }
    if (kind != "truncated") throw std::invalid_argument("unknown representation kind '" + kind + "'");

    GradedRep rep;
    rep.truncation = j.at("truncation").get<std::size_t>();
    if (rep.truncation < 1) throw std::invalid_argument("truncation must be >= 1");
    const auto labels = j.at("labels").get<std::string>();
    if (labels != "primes" && labels != "transcendental") throw std::invalid_argument("unknown label field '" + labels + "'");
    rep.labels = labels == "primes" ? LabelField::primes : LabelField::transcendental;
    VariableParser parse = [&](std::string_view n) { return parse_graded_variable(q, rep.truncation, n); };

    const auto& bj = j.at("basis_labels");
    if (bj.size() != q.vertex_count()) throw std::invalid_argument("basis_labels does not match the quiver");
    rep.basis.resize(q.vertex_count());
    for (VertexId x = 0; x < q.vertex_count(); ++x) {
      if (bj[x].at("vertex").get<std::string>() != q.vertex_name(x))
        throw std::invalid_argument("basis_labels vertex order does not match quiver");
      for (const auto& l : bj[x].at("labels")) {
        BasisLabel label{x, std::nullopt};
        if (!l.at("grade").is_null()) label.grade = l.at("grade").get<std::size_t>();
        rep.basis[x].push_back(label);
      }
      if (rep.basis[x].size() != dims[x]) throw std::invalid_argument("basis_labels disagree with vertex_dims");
    }
    rep.arrows = arrows_from_json(q, j, dims, parse);

    if (j.contains("prime_table") && !j.at("prime_table").empty()) {
      rep.label_table.assign(q.arrow_count(), std::vector<MultiPoly>(rep.truncation));
      std::size_t seen = 0;
      for (const auto& e : j.at("prime_table")) {
        auto a = q.find_arrow(e.at("arrow").get<std::string>());
        const auto k = e.at("k").get<std::size_t>();
        if (!a || k >= rep.truncation) throw std::invalid_argument("prime_table entry out of range");
        rep.label_table[*a][k] = entry_from_json(e.at("value"), parse);
        ++seen;
      }
      if (seen != q.arrow_count() * rep.truncation) throw std::invalid_argument("prime_table is incomplete");
    }
    return rep;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed representation JSON: ") + e.what());
  }
}

json to_json(const Quiver& q, const VerifyReport& report) {
  json witness = json::array();
  for (const auto& p : report.witness) witness.push_back(to_string(q, p));
  return {{"status", to_string(report.status)},
          {"checked", report.checked},
          {"max_length", report.max_length},
          {"witness", std::move(witness)}};
}

json analysis_json(const Quiver& q, std::optional<std::size_t> truncation) {
  const auto part = sccs(q);
  const auto cls = classify_path(q);
  const auto lengths = length_profile(q);
  std::optional<KProfile> kp;
  if (truncation) kp = k_profile(q, *truncation);

  json vertices = json::array();
  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    json v = {{"id", q.vertex_name(x)},
              {"scc", part.component_of[x]},
              {"commutative", !cls.in_a[x]},
              {"l_minus", to_json(lengths[x].incoming)},
              {"l_plus", to_json(lengths[x].outgoing)}};
    if (kp) {
      const auto& k = kp->k[x];
      v["K"] = k ? json::array({k->lo, k->hi}) : json(nullptr);
      v["d"] = kp->d[x];
    }
    vertices.push_back(std::move(v));
  }
  const auto st = stabilization(q);
  json totals = {{"n", q.vertex_count()},
                 {"effdim_path", effdim_path(q)},
                 {"effdim_truncated", kp ? json(kp->total()) : json(nullptr)},
                 {"a", st.a},
                 {"b", st.b},
                 {"threshold", st.threshold}};
  return {{"quiver", to_json(q)},
          {"sccs", to_json(q, part)},
          {"truncation", truncation ? json(*truncation) : json(nullptr)},
          {"vertices", std::move(vertices)},
          {"totals", std::move(totals)}};
}

}  // namespace effdim
