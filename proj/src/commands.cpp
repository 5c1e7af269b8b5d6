#include "effdim/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "effdim/dimension.hpp"
#include "effdim/json_io.hpp"
#include "effdim/oracle.hpp"
#include "effdim/path.hpp"

namespace effdim {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Quiver read_quiver(const RunConfig& cfg) {
  if (cfg.quiver_path.empty()) throw InputError("no quiver file given");
  return load_quiver(cfg.quiver_path);
}

void check_config(const RunConfig& cfg) {
  if (cfg.truncate && *cfg.truncate < 1) throw InputError("--truncate must be >= 1");
  if (cfg.max_len && *cfg.max_len < 1) throw InputError("--max-len must be >= 1");
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

void print_report(const Quiver& q, const VerifyReport& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    out << to_json(q, report).dump(2) << '\n';
    return;
  }
  out << "status: " << to_string(report.status) << '\n';
  out << "checked: " << report.checked << " elements (max length " << report.max_length << ")\n";
  if (!report.witness.empty()) {
    out << "witness:";
    for (const auto& p : report.witness) out << ' ' << to_string(q, p);
    out << '\n';
  }
}

}  // namespace

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  check_config(cfg);
  const auto q = read_quiver(cfg);
  const auto report = analysis_json(q, cfg.truncate);
  if (cfg.format == OutputFormat::json) {
    out << report.dump(2) << '\n';
    return exit_code::ok;
  }
  const auto& totals = report["totals"];
  out << "quiver: " << q.vertex_count() << " vertices, " << q.arrow_count() << " arrows, "
      << report["sccs"]["components"].size() << " strongly connected components\n";
  std::size_t w = 8;
  for (const auto& v : q.vertices()) w = std::max(w, v.size() + 2);
  out << pad("vertex", w) << pad("scc", 5) << pad("commutative", 13) << pad("l-", 5) << pad("l+", 5);
  if (cfg.truncate) out << pad("K", 9) << "d";
  out << '\n';
  auto len = [](const json& j) { return j.is_string() ? j.get<std::string>() : std::to_string(j.get<std::size_t>()); };
  for (const auto& v : report["vertices"]) {
    out << pad(v["id"].get<std::string>(), w) << pad(std::to_string(v["scc"].get<std::size_t>()), 5)
        << pad(v["commutative"].get<bool>() ? "yes" : "no", 13) << pad(len(v["l_minus"]), 5) << pad(len(v["l_plus"]), 5);
    if (cfg.truncate) {
      const auto& k = v["K"];
      std::string ks = k.is_null() ? "-" : "[" + std::to_string(k[0].get<std::size_t>()) + "," +
                                               std::to_string(k[1].get<std::size_t>()) + "]";
      out << pad(ks, 9) << v["d"].get<std::size_t>();
    }
    out << '\n';
  }
  out << "eff.dim(P) = " << totals["effdim_path"].get<std::size_t>() << '\n';
  if (cfg.truncate)
    out << "eff.dim(P_" << *cfg.truncate << ") = " << totals["effdim_truncated"].get<std::size_t>() << '\n';
  return exit_code::ok;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  check_config(cfg);
  const auto q = read_quiver(cfg);
  if (cfg.truncate)
    out << to_json(q, build_truncated_rep(q, *cfg.truncate, cfg.labels)).dump(2) << '\n';
  else
    out << to_json(q, build_path_rep(q)).dump(2) << '\n';
  return exit_code::ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  check_config(cfg);
  const auto q = read_quiver(cfg);

  std::optional<AnyRep> loaded;
  if (cfg.rep_path) {
    std::ifstream in(*cfg.rep_path);
    if (!in) throw InputError("cannot open representation file '" + *cfg.rep_path + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw InputError(std::string("representation file is not valid JSON: ") + e.what());
    }
    loaded = rep_from_json(q, j);
  }

  const bool graded = cfg.truncate.has_value() || (loaded && std::holds_alternative<GradedRep>(*loaded));
  if (graded) {
    GradedRep rep;
    if (loaded) {
      if (!std::holds_alternative<GradedRep>(*loaded)) throw InputError("--truncate given but the file holds a path representation");
      rep = std::get<GradedRep>(*loaded);
    } else {
      rep = build_truncated_rep(q, *cfg.truncate, cfg.labels);
    }
    const std::size_t n = cfg.truncate.value_or(rep.truncation);
    auto report = verify_truncated(rep, q, n);
    if (report.effective()) {
      auto filtration = verify_filtration(rep, q);
      if (!filtration.effective()) report = filtration;
    }
    print_report(q, report, cfg.format, out);
    return report.effective() ? exit_code::ok : exit_code::failure;
  }

  SymbolicRep rep = loaded ? std::get<SymbolicRep>(*loaded) : build_path_rep(q);
  const std::size_t max_len = cfg.max_len.value_or(2 * q.vertex_count() + 2);
  const auto report = verify_path_rep(rep, q, max_len, {cfg.threads, cfg.seed});
  print_report(q, report, cfg.format, out);
  return report.effective() ? exit_code::ok : exit_code::failure;
}

int cmd_stabilize(const RunConfig& cfg, std::ostream& out) {
  check_config(cfg);
  const auto q = read_quiver(cfg);
  const auto st = stabilization(q);
  const std::size_t upto = q.vertex_count() + 1;
  if (cfg.format == OutputFormat::json) {
    json table = json::array();
    for (std::size_t n = 1; n <= upto; ++n) table.push_back({{"N", n}, {"effdim", effdim_truncated(q, n)}});
    out << json{{"a", st.a}, {"b", st.b}, {"threshold", st.threshold}, {"table", std::move(table)}}.dump(2) << '\n';
    return exit_code::ok;
  }
  out << "a = " << st.a << ", b = " << st.b << ", threshold n = " << st.threshold << '\n';
  out << "eff.dim(P_N) = " << st.a << "*N + " << st.b << " for N >= " << st.threshold << '\n';
  out << pad("N", 4) << "eff.dim(P_N)\n";
  for (std::size_t n = 1; n <= upto; ++n) out << pad(std::to_string(n), 4) << effdim_truncated(q, n) << '\n';
  return exit_code::ok;
}

int cmd_formula(const RunConfig& cfg, std::ostream& out) {
  check_config(cfg);
  if (!cfg.truncate) throw InputError("formula needs --truncate N");
  std::vector<std::size_t> segments = cfg.segments;
  std::optional<std::size_t> direct;
  if (!cfg.quiver_path.empty()) {
    const auto q = read_quiver(cfg);
    auto seg = an_segments(q);
    if (!seg) throw InputError("quiver is not of type A_n");
    segments = *seg;
    direct = effdim_truncated(q, *cfg.truncate);
  }
  if (segments.empty()) throw InputError("formula needs --segments or a type-A quiver file");
  const auto closed = an_closed_form(segments, *cfg.truncate);
  const bool agree = !direct || *direct == closed;
  if (cfg.format == OutputFormat::json) {
    json j = {{"segments", segments}, {"truncation", *cfg.truncate}, {"closed_form", closed}};
    if (direct) j["sum_d"] = *direct;
    out << j.dump(2) << '\n';
  } else {
    out << "segments:";
    for (auto s : segments) out << ' ' << s;
    out << "\neff.dim(P_" << *cfg.truncate << ") = " << closed << " (closed form)\n";
    if (direct) out << "sum of d_x = " << *direct << (agree ? "" : "  MISMATCH") << '\n';
  }
  return agree ? exit_code::ok : exit_code::failure;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int code = exit_code::ok;
  try {
    if (cfg.command == "analyze")
      code = cmd_analyze(cfg, buffer);
    else if (cfg.command == "construct")
      code = cmd_construct(cfg, buffer);
    else if (cfg.command == "verify")
      code = cmd_verify(cfg, buffer);
    else if (cfg.command == "stabilize")
      code = cmd_stabilize(cfg, buffer);
    else if (cfg.command == "formula")
      code = cmd_formula(cfg, buffer);
    else
      throw InputError("unknown command '" + cfg.command + "'");
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::input_error;
  } catch (const std::exception& e) {
    // Parse errors, unreadable files, schema violations and contract misuse.
    err << "error: " << e.what() << '\n';
    return exit_code::input_error;
  }
  if (cfg.out_path) {
    std::ofstream file(*cfg.out_path);
    if (!file) {
      err << "error: cannot write '" << *cfg.out_path << "'\n";
      return exit_code::input_error;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace effdim
