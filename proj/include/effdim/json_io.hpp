#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "effdim/dimension.hpp"
#include "effdim/oracle.hpp"
#include "effdim/poly.hpp"
#include "effdim/quiver.hpp"
#include "effdim/rep.hpp"

namespace effdim {

using json = nlohmann::ordered_json;

json to_json(const Quiver& q);
json to_json(const Quiver& q, const SccPartition& part);

/// Finite values as numbers, infinity as the string "inf".
json to_json(ExtLen e);
ExtLen ext_len_from_json(const json& j);

/// [{"coeff": "<decimal>", "exps": [["tau(a)", 2], ...]}, ...], leading term first.
json to_json(const MultiPoly& p, const VariableNamer& name);
using VariableParser = std::function<std::optional<VarIndex>(std::string_view)>;
MultiPoly poly_from_json(const json& j, const VariableParser& parse);

/// Representation documents; see README for the schema.
json to_json(const Quiver& q, const SymbolicRep& rep);
json to_json(const Quiver& q, const GradedRep& rep);

using AnyRep = std::variant<SymbolicRep, GradedRep>;
/// Throws std::invalid_argument on schema violations or quiver mismatch.
AnyRep rep_from_json(const Quiver& q, const json& j);

json to_json(const Quiver& q, const VerifyReport& report);

/// Per-vertex lengths, K(x) and d_x (when N is given) plus all totals.
json analysis_json(const Quiver& q, std::optional<std::size_t> truncation);

}  // namespace effdim
