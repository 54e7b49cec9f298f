#include <doctest.h>

#include "support.hpp"

using namespace tf_test;

namespace {

std::vector<std::size_t> cell_of_labels(const Quiver& q, std::initializer_list<const char*> labels) {
  std::vector<std::size_t> out;
  for (auto l : labels) out.push_back(q.vertex_index(l));
  return out;
}

std::size_t cell_containing(const SliceContext& ctx, const std::string& label) {
  return ctx.cells().cell_of[ctx.object().index(label)];
}

}  // namespace

TEST_CASE("APR transform") {
  Quiver q = fix_d5();
  CHECK(apr_transform(q, arrows(q, "4->1"), cell_of_labels(q, {"4", "5"})) == arrows(q, "2->4,3->4"));
  CHECK(apr_transform(q, arrows(q, "2->4,3->4"), cell_of_labels(q, {"2", "3"})) == arrows(q, "1->2,1->3"));
  Quiver c = fix_a3c();
  CHECK(apr_transform(c, arrows(c, "1->2"), cell_of_labels(c, {"1", "2", "3"})) == arrows(c, "1->2"));
  CHECK_THROWS_AS(apr_transform(c, arrows(c, "1->2"), cell_of_labels(c, {"1", "2"})), InternalError);
}

TEST_CASE("jumpability") {
  D5Grid fig;
  SliceContext ctx = fig.context();
  LocalSlice sigma1 = make_slice({fig.at(1, 0), fig.at(1, 1), fig.at(0, 1), fig.at(9, 2), fig.at(8, 3)});
  CHECK(jumpable(ctx, sigma1, cell_containing(ctx, "4")));
  CHECK_FALSE(jumpable(ctx, sigma1, cell_containing(ctx, "1")));

  SliceContext a5 = context_for(fix_a5());
  auto supporting = supporting_slices(a5, arrows(a5.quiver(), "3->1,5->2"));
  REQUIRE_FALSE(supporting.empty());
  auto r = rightmost_representative(a5, supporting.front());
  const std::size_t c3 = cell_containing(a5, "3");
  CHECK(cell_labels(a5, c3) == std::vector<std::string>{"3"});
  CHECK_FALSE(jumpable(a5, r, c3));
  CHECK_FALSE(jump_start(a5, r, c3, Direction::minus));

  SliceContext hered = context_for(fix_a3l());
  for (std::size_t c = 0; c < hered.cells().cells.size(); ++c)
    for (const auto& s : hered.slices()) CHECK(annihilator_set(hered, s).arrows.empty());
}

TEST_CASE("maximal tilted subalgebras of the fixtures") {
  Quiver d5 = fix_d5();
  auto r = maximal_tilted_subalgebras(d5);
  std::vector<AdmissibleSet> expected{arrows(d5, "4->1"), arrows(d5, "2->4,3->4"), arrows(d5, "1->2,1->3")};
  std::sort(expected.begin(), expected.end());
  CHECK(relation_sets(r) == expected);
  REQUIRE(r.presentations.size() == 3);
  CHECK(r.presentations[0].relations == arrows(d5, "1->2,1->3"));
  CHECK(r.presentations[1].jump_path == std::vector<std::vector<std::string>>{{"1"}});
  CHECK(r.presentations[2].jump_path == std::vector<std::vector<std::string>>{{"1"}, {"4", "5"}});

  Quiver l = fix_a3l();
  auto rl = maximal_tilted_subalgebras(l);
  REQUIRE(rl.presentations.size() == 1);
  CHECK(rl.presentations[0].relations.arrows.empty());

  Quiver c = fix_a3c();
  CHECK(relation_sets(maximal_tilted_subalgebras(c)) ==
        std::vector<AdmissibleSet>{arrows(c, "1->2"), arrows(c, "2->3"), arrows(c, "3->1")});

  Quiver a5 = fix_a5();
  auto ra = relation_sets(maximal_tilted_subalgebras(a5));
  CHECK(ra.size() == 7);
  CHECK(std::find(ra.begin(), ra.end(), arrows(a5, "2->3,5->2")) == ra.end());
  CHECK(std::find(ra.begin(), ra.end(), arrows(a5, "3->1,5->2")) != ra.end());
}

TEST_CASE("leftward pass agrees") {
  for (const auto& q : {fix_d5(), fix_a3l(), fix_a3c(), fix_a5()}) {
    SliceContext ctx = context_for(q);
    CHECK(relation_sets(leftward_pass(ctx)) == relation_sets(maximal_tilted_subalgebras(ctx)));
  }
}

TEST_CASE("algorithm invariants on the D4 class") {
  ClusterModel m = ClusterModel::build(dynkin_quiver(type("D4")));
  for (const auto& ct : all_cluster_tilting(m)) {
    SliceContext ctx(m, numbered(ct));
    auto r = maximal_tilted_subalgebras(ctx);
    auto sets = relation_sets(r);
    CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
    for (const auto& s : sets) CHECK(is_tilted_admissible(ctx, s));
    CHECK(sets.size() == homotopy_classes_bruteforce(m, ctx.object()).size());
    for (const auto& e : r.edges) {
      std::vector<std::size_t> cell;
      for (const auto& l : e.cell) cell.push_back(ctx.quiver().vertex_index(l));
      CHECK(apr_transform(ctx.quiver(), r.presentations[e.from].relations, cell) == r.presentations[e.to].relations);
    }
  }
}

TEST_CASE("closure cap fails loudly") {
  SliceContext ctx = context_for(fix_d5());
  CHECK_THROWS_AS(maximal_tilted_subalgebras(ctx, 2), InternalError);
}
