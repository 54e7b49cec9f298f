#include <doctest.h>

#include "support.hpp"

using namespace tf_test;

TEST_CASE("brute-force maximal tilted subalgebras") {
  for (const auto& q : {fix_d5(), fix_a3l(), fix_a3c(), fix_a5()}) {
    auto r = realize_quiver(q);
    SliceContext ctx(r.model, r.object, q);
    CHECK(brute_force_maximal_tilted(r.model, r.object, q) == relation_sets(maximal_tilted_subalgebras(ctx)));
  }
  auto l = realize_quiver(fix_a3l());
  auto sets = brute_force_maximal_tilted(l.model, l.object, fix_a3l());
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].arrows.empty());
  auto c = realize_quiver(fix_a3c());
  CHECK(brute_force_maximal_tilted(c.model, c.object, fix_a3c()).size() == 3);
}

TEST_CASE("brute-force homotopy classes") {
  D5Grid fig;
  CHECK(homotopy_classes_bruteforce(fig.model, fig.object).size() == 3);
  auto l = realize_quiver(fix_a3l());
  CHECK(homotopy_classes_bruteforce(l.model, l.object).size() == 1);
}

TEST_CASE("slice axioms") {
  D5Grid fig;
  const auto& m = fig.model;
  CHECK(is_local_slice(m, {fig.at(1, 0), fig.at(1, 1), fig.at(0, 1), fig.at(9, 2), fig.at(8, 3)}));
  CHECK_FALSE(is_local_slice(m, {fig.at(1, 0), fig.at(1, 1), fig.at(0, 1), fig.at(9, 2)}));
  CHECK_FALSE(is_local_slice(m, {fig.at(1, 0), fig.at(3, 0), fig.at(2, 1), fig.at(3, 2), fig.at(2, 3)}));
  CHECK(slice_axiom_violation(m, {fig.at(1, 0), fig.at(3, 0), fig.at(2, 1), fig.at(3, 2), fig.at(2, 3)}));
}

TEST_CASE("cost guard") {
  ClusterModel a6 = ClusterModel::build(dynkin_quiver(type("A6")));
  CHECK_THROWS_AS(brute_force_slices(a6, projective_object(a6)), InputError);
}

TEST_CASE("oracle reports on the fixtures") {
  for (const auto& q : {fix_d5(), fix_a3l(), fix_a3c(), fix_a5()}) {
    auto r = realize_quiver(q);
    auto rep = run_oracle(r.model, r.object, q);
    CHECK(rep.ok());
    CHECK(rep.class_count == rep.maximal_tilted.size());
  }
  D5Grid fig;
  auto rep = run_oracle(fig.model, fig.object, fig.quiver);
  CHECK(rep.slice_count == 25);
  CHECK(rep.class_count == 3);
}

TEST_CASE("golden files regenerate identically") {
  for (auto name : {"fix_a3c", "fix_a3l", "fix_d5", "fix_a5"}) {
    auto q = fixture_path(std::string(name) + ".json");
    auto oracle = cli({"oracle", "--quiver", q});
    CHECK(oracle.code == 0);
    CHECK(oracle.out == read_text(fixture_path(std::string("golden/oracle_") + name + ".json")));
    auto maximal = cli({"maximal-tilted", "--quiver", q});
    CHECK(maximal.code == 0);
    CHECK(maximal.out == read_text(fixture_path(std::string("golden/maximal_") + name + ".json")));
  }
  auto sweep = cli({"oracle", "--sweep", "A3"});
  CHECK(sweep.out == read_text(fixture_path("golden/oracle_sweep_A3.json")));
}
