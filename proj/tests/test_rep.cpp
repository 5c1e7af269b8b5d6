#include <doctest.h>

#include "effdim/dimension.hpp"
#include "effdim/rep.hpp"
#include "support.hpp"

using namespace effdim;
using effdim::testing::make_quiver;

namespace {
MultiPoly var(ArrowId a, VarKind k) { return MultiPoly::variable(symbolic_variable(a, k)); }
MultiPoly num(long v) { return MultiPoly(Integer(v)); }
}  // namespace

TEST_CASE("symbolic templates") {
  SUBCASE("single loop is a 1x1 tau") {
    const auto q = make_quiver(1, {{0, 0}});
    const auto rep = build_path_rep(q);
    CHECK(rep.dims == std::vector<std::size_t>{1});
    CHECK(rep.arrows[0] == PolyMatrix(1, 1, {var(0, VarKind::tau)}));
  }
  SUBCASE("two loops are upper triangular") {
    const auto q = make_quiver(1, {{0, 0}, {0, 0}});
    const auto rep = build_path_rep(q);
    CHECK(rep.dims == std::vector<std::size_t>{2});
    for (ArrowId a = 0; a < 2; ++a)
      CHECK(rep.arrows[a] == PolyMatrix(2, 2, {var(a, VarKind::tau), var(a, VarKind::eta), MultiPoly(), var(a, VarKind::zeta)}));
  }
  SUBCASE("noncommutative tail, commutative head gives a row") {
    const auto q = make_quiver(2, {{0, 0}, {0, 0}, {0, 1}});
    const auto rep = build_path_rep(q);
    CHECK(rep.dims == std::vector<std::size_t>{2, 1});
    CHECK(rep.arrows[2] == PolyMatrix(1, 2, {var(2, VarKind::tau), var(2, VarKind::zeta)}));
  }
  SUBCASE("commutative tail, noncommutative head gives a column") {
    const auto q = make_quiver(2, {{1, 1}, {1, 1}, {0, 1}});
    const auto rep = build_path_rep(q);
    CHECK(rep.arrows[2] == PolyMatrix(2, 1, {var(2, VarKind::tau), var(2, VarKind::zeta)}));
  }
  SUBCASE("dimension is |A| + n over the suite") {
    for (const auto& q : effdim::testing::random_suite()) CHECK(build_path_rep(q).total_dimension() == effdim_path(q));
  }
}

TEST_CASE("variable names") {
  const auto q = make_quiver(2, {{0, 1}, {1, 0}});
  const auto name = symbolic_namer(q);
  CHECK(name(symbolic_variable(1, VarKind::eta)) == "eta(a1)");
  CHECK(parse_symbolic_variable(q, "zeta(a0)") == std::optional<VarIndex>(symbolic_variable(0, VarKind::zeta)));
  CHECK_FALSE(parse_symbolic_variable(q, "zeta(b)").has_value());
  CHECK_FALSE(parse_symbolic_variable(q, "rho(a0)").has_value());
  const auto g = graded_namer(q, 3);
  CHECK(g(graded_variable(1, 2, 3)) == "lambda(a1,2)");
  CHECK(parse_graded_variable(q, 3, "lambda(a1,2)") == std::optional<VarIndex>(graded_variable(1, 2, 3)));
  CHECK_FALSE(parse_graded_variable(q, 3, "lambda(a1,3)").has_value());
}

TEST_CASE("prime allocation") {
  CHECK(first_primes(6) == std::vector<Integer>{2, 3, 5, 7, 11, 13});
  CHECK(first_primes(1000).back() == 7919);
  const auto one = make_quiver(2, {{0, 1}});
  CHECK(allocate_primes(one, 2) == std::vector<std::vector<Integer>>{{2, 3}});
  CHECK(allocate_primes(one, 4) == std::vector<std::vector<Integer>>{{2, 3, 5, 7}});
  const auto two = make_quiver(2, {{0, 1}, {0, 1}});
  CHECK(allocate_primes(two, 1) == std::vector<std::vector<Integer>>{{2}, {3}});
}

TEST_CASE("truncated construction of A_2") {
  const auto q = make_quiver(2, {{0, 1}});
  const auto rep = build_truncated_rep(q, 2);
  CHECK(dims_of(rep) == std::vector<std::size_t>{1, 1});
  CHECK(to_string(q, rep.basis[0][0]) == "v_v0^(0)");
  CHECK(to_string(q, rep.basis[1][0]) == "v_v1^(1)");
  CHECK(rep.arrows[0] == PolyMatrix(1, 1, {num(2)}));
  const auto img = rep_of_path(rep, Path::from_arrows(q, {0}));
  CHECK_FALSE(img.acts_as_zero());
  CHECK(img.matrix == PolyMatrix(1, 1, {num(2)}));

  const auto one = build_truncated_rep(q, 1);
  CHECK(dims_of(one) == std::vector<std::size_t>{1, 1});
  CHECK(rep_of_path(one, Path::from_arrows(q, {0})).acts_as_zero());
}

TEST_CASE("truncated loop is nilpotent") {
  const auto q = make_quiver(1, {{0, 0}});
  const auto rep = build_truncated_rep(q, 3);
  CHECK(rep.total_dimension() == 3);
  CHECK(rep_of_path(rep, Path::from_arrows(q, {0, 0, 0})).acts_as_zero());
  CHECK_FALSE(rep_of_path(rep, Path::from_arrows(q, {0, 0})).acts_as_zero());
  CHECK(rep_of_path(rep, Path::trivial(0)).matrix == PolyMatrix::identity(3));
}

TEST_CASE("transcendental labels") {
  const auto q = make_quiver(2, {{0, 1}, {0, 1}});
  const auto rep = build_truncated_rep(q, 2, LabelField::transcendental);
  CHECK(rep.labels == LabelField::transcendental);
  CHECK(rep.arrows[1] == PolyMatrix(1, 1, {MultiPoly::variable(graded_variable(1, 0, 2))}));
}

TEST_CASE("truncated dimension matches sum of d over the suite") {
  for (const auto& q : effdim::testing::random_suite())
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto rep = build_truncated_rep(q, n);
      const auto prof = k_profile(q, n);
      CHECK(rep.total_dimension() == prof.total());
      for (VertexId x = 0; x < q.vertex_count(); ++x) CHECK(rep.dim(x) == prof.d[x]);
    }
}

TEST_CASE("rep_of_path on symbolic reps") {
  const auto q = make_quiver(1, {{0, 0}, {0, 0}});
  const auto rep = build_path_rep(q);
  CHECK(rep_of_path(rep, Path::trivial(0)).matrix == PolyMatrix::identity(2));
  CHECK(rep_of_path(rep, Path::zero()).acts_as_zero());
  // b*a: a first, so R(b)R(a).
  const auto ba = rep_of_path(rep, Path::from_arrows(q, {0, 1}));
  CHECK(ba.matrix == rep.arrows[1] * rep.arrows[0]);
}

TEST_CASE("closed-form corner entry of letter products") {
  const std::vector<ArrowId> a{0}, ab{0, 1}, aa{0, 0};
  CHECK(lemma3_entry(a) == var(0, VarKind::eta));
  CHECK(lemma3_entry(ab) == var(0, VarKind::tau) * var(1, VarKind::eta) + var(0, VarKind::eta) * var(1, VarKind::zeta));
  CHECK(lemma3_entry(aa) == var(0, VarKind::tau) * var(0, VarKind::eta) + var(0, VarKind::eta) * var(0, VarKind::zeta));
}
