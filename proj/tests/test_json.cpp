#include <doctest.h>

#include "effdim/json_io.hpp"
#include "support.hpp"

using namespace effdim;
using effdim::testing::make_quiver;

TEST_CASE("ExtLen JSON") {
  CHECK(to_json(ExtLen::infinity()) == json("inf"));
  CHECK(to_json(ExtLen(3)) == json(3));
  CHECK(ext_len_from_json(json("inf")).is_infinite());
  CHECK(ext_len_from_json(json(4)) == ExtLen(4));
  CHECK_THROWS(ext_len_from_json(json("infinity")));
}

TEST_CASE("polynomial JSON round-trip") {
  const auto q = make_quiver(1, {{0, 0}, {0, 0}});
  const auto p = MultiPoly::term(Integer("123456789012345678901234567890"),
                                 Monomial::from_factors({{symbolic_variable(0, VarKind::tau), 2}})) -
                 MultiPoly::variable(symbolic_variable(1, VarKind::zeta));
  const auto j = to_json(p, symbolic_namer(q));
  CHECK(j[0]["coeff"] == "123456789012345678901234567890");
  CHECK(j[0]["exps"][0][0] == "tau(a0)");
  const auto back = poly_from_json(j, [&](std::string_view s) { return parse_symbolic_variable(q, s); });
  CHECK(back == p);
  CHECK_THROWS_AS(poly_from_json(json::parse(R"([{"coeff":"1","exps":[["nope",1]]}])"),
                                 [&](std::string_view s) { return parse_symbolic_variable(q, s); }),
                  std::invalid_argument);
}

TEST_CASE("representation documents round-trip") {
  for (const auto& q : effdim::testing::random_suite(3, 40)) {
    const auto sym = build_path_rep(q);
    const auto s = rep_from_json(q, json::parse(to_json(q, sym).dump()));
    REQUIRE(std::holds_alternative<SymbolicRep>(s));
    CHECK(std::get<SymbolicRep>(s).dims == sym.dims);
    CHECK(std::get<SymbolicRep>(s).arrows == sym.arrows);

    for (auto labels : {LabelField::primes, LabelField::transcendental}) {
      const auto gr = build_truncated_rep(q, 3, labels);
      const auto g = rep_from_json(q, json::parse(to_json(q, gr).dump()));
      REQUIRE(std::holds_alternative<GradedRep>(g));
      const auto& back = std::get<GradedRep>(g);
      CHECK(back.truncation == 3);
      CHECK(back.labels == labels);
      CHECK(back.basis == gr.basis);
      CHECK(back.arrows == gr.arrows);
    }
  }
}

TEST_CASE("serialization is deterministic") {
  const auto q = make_quiver(3, {{0, 1}, {1, 1}, {1, 2}, {2, 0}});
  CHECK(to_json(q, build_truncated_rep(q, 4)).dump() == to_json(q, build_truncated_rep(q, 4)).dump());
  CHECK(to_json(q, build_path_rep(q)).dump() == to_json(q, build_path_rep(q)).dump());
  CHECK(analysis_json(q, 3).dump() == analysis_json(q, 3).dump());
}

TEST_CASE("schema violations are rejected") {
  const auto q = make_quiver(2, {{0, 1}});
  auto doc = to_json(q, build_truncated_rep(q, 2));
  SUBCASE("wrong kind") {
    doc["kind"] = "other";
    CHECK_THROWS_AS(rep_from_json(q, doc), std::invalid_argument);
  }
  SUBCASE("wrong arrow") {
    doc["arrows"][0]["id"] = "b";
    CHECK_THROWS_AS(rep_from_json(q, doc), std::invalid_argument);
  }
  SUBCASE("wrong shape") {
    doc["arrows"][0]["shape"] = json::array({2, 1});
    CHECK_THROWS_AS(rep_from_json(q, doc), std::invalid_argument);
  }
  SUBCASE("missing field") {
    doc.erase("basis_labels");
    CHECK_THROWS_AS(rep_from_json(q, doc), std::invalid_argument);
  }
  SUBCASE("other quiver") {
    CHECK_THROWS_AS(rep_from_json(make_quiver(2, {{1, 0}}), doc), std::invalid_argument);
  }
}

TEST_CASE("analysis totals equal the module operations") {
  for (const auto& q : effdim::testing::random_suite(9, 40)) {
    const auto j = analysis_json(q, 3);
    const auto st = stabilization(q);
    CHECK(j["totals"]["effdim_path"] == effdim_path(q));
    CHECK(j["totals"]["effdim_truncated"] == effdim_truncated(q, 3));
    CHECK(j["totals"]["a"] == st.a);
    CHECK(j["totals"]["b"] == st.b);
    CHECK(j["totals"]["n"] == q.vertex_count());
  }
  CHECK(analysis_json(make_quiver(1, {{0, 0}}), std::nullopt)["totals"]["effdim_truncated"].is_null());
}
