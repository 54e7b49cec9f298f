#include <doctest.h>

#include "support.hpp"

using namespace tf_test;

TEST_CASE("fundamental domain sizes are roots plus rank") {
  std::vector<std::pair<const char*, std::size_t>> expected{{"A1", 2},  {"A2", 5},  {"A3", 9}, {"A4", 14},
                                                            {"D4", 16}, {"D5", 25}, {"E6", 42}};
  for (const auto& [name, count] : expected) {
    CHECK(ClusterModel::build(dynkin_quiver(type(name))).vertices().size() == count);
    CHECK(ClusterModel::build(dynkin_quiver(type(name), "alternating")).vertices().size() == count);
  }
}

TEST_CASE("canonical representatives") {
  ClusterModel m = ClusterModel::build(dynkin_quiver(type("D5"), "alternating"));
  const auto& z = m.derived();
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (int n = z.window_lo(); n <= z.window_hi(); ++n) {
      DVertex v{i, n};
      CHECK(m.canonicalize(z.apply(Auto::F, v)) == m.canonicalize(v));
      CHECK(m.in_domain(m.canonicalize(v).rep));
    }
  for (const auto& v : m.vertices()) {
    CHECK(m.tau_inv(m.tau(v)) == v);
    CHECK(m.canonicalize(m.lift(v, 1)) == v);
    for (const auto& w : m.successors(v)) CHECK(m.has_arrow(v, w));
  }
}

TEST_CASE("Hom and Ext in the cluster category") {
  for (auto name : {"A3", "D4"}) {
    ClusterModel m = ClusterModel::build(dynkin_quiver(type(name)));
    for (const auto& x : m.vertices()) {
      auto e = hom_c(m, x, x);
      CHECK(e.dimension() >= 1);
      CHECK(ext1_c(m, x, x) == 0);
      for (const auto& y : m.vertices()) {
        CHECK(ext1_c(m, x, y) == ext1_c(m, y, x));
        CHECK(hom_c(m, x, y).dimension() == m.hom_dim(x, y));
        CHECK(hom_c_basis(m, x, y).size() == m.hom_dim(x, y));
      }
    }
    auto p = projective_object(m);
    for (const auto& a : p.summands)
      for (const auto& b : p.summands) CHECK(ext1_c(m, a, b) == 0);
  }
}

TEST_CASE("graded composition with identities") {
  ClusterModel m = ClusterModel::build(dynkin_quiver(type("A3")));
  for (const auto& x : m.vertices()) {
    auto id = hom_c_basis(m, x, x);
    REQUIRE(!id.empty());
    for (const auto& y : m.vertices())
      for (const auto& f : hom_c_basis(m, x, y)) {
        auto g = compose_c(m, id[0], f);
        CHECK(g.components == f.components);
      }
  }
}

TEST_CASE("cluster-tilting objects") {
  ClusterModel m = ClusterModel::build(dynkin_quiver(type("A3")));
  auto p = projective_object(m);
  CHECK(is_cluster_tilting(m, p.summands));
  auto bad = p.summands;
  bad[1] = m.tau_inv(bad[1]);
  CHECK_FALSE(is_cluster_tilting(m, bad));
  CHECK_THROWS_AS(is_cluster_tilting(m, {p.summands[0]}), InputError);

  D5Grid fig;
  CHECK(is_cluster_tilting(fig.model, fig.object.summands));
  CHECK(fig.model.hom_dim(fig.summand("1"), fig.summand("4")) >= 1);

  CHECK(all_cluster_tilting(m).size() == 14);
  CHECK(all_cluster_tilting(ClusterModel::build(dynkin_quiver(type("A4")))).size() == 42);
  CHECK(all_cluster_tilting(ClusterModel::build(dynkin_quiver(type("D4")))).size() == 50);
}

TEST_CASE("mutation of cluster-tilting objects") {
  ClusterModel a3 = ClusterModel::build(dynkin_quiver(type("A3")));
  auto p = projective_object(a3);
  CHECK(same_arrows(gabriel_quiver(a3, ct_mutate(a3, p, "2")), mutate(a3.seed(), "2")));
  CHECK(isomorphism(gabriel_quiver(a3, ct_mutate(a3, p, "2")), fix_a3c()));

  for (auto name : {"A3", "A4", "D4"}) {
    ClusterModel m = ClusterModel::build(dynkin_quiver(type(name)));
    for (const auto& ct : all_cluster_tilting(m)) {
      auto t = numbered(ct);
      Quiver g = gabriel_quiver(m, t);
      for (const auto& k : t.labels) {
        auto u = ct_mutate(m, t, k);
        CHECK(is_cluster_tilting(m, u.summands));
        CHECK(ct_mutate(m, u, k) == t);
        CHECK(same_arrows(gabriel_quiver(m, u), mutate(g, k)));
      }
    }
  }
}

TEST_CASE("Gabriel quivers") {
  for (auto name : {"A1", "A3", "A5", "D4", "D5", "E6", "E7"})
    for (auto orient : {"linear", "alternating"}) {
      ClusterModel m = ClusterModel::build(dynkin_quiver(type(name), orient));
      CHECK(same_arrows(gabriel_quiver(m, projective_object(m)), m.seed()));
    }
  D5Grid fig;
  CHECK(same_arrows(gabriel_quiver(fig.model, fig.object), fix_d5()));
}

TEST_CASE("realization") {
  auto l = realize_quiver(fix_a3l());
  CHECK(l.mutation_path.empty());
  CHECK(l.object == projective_object(l.model));

  for (const auto& q : {fix_d5(), fix_a3c(), fix_a5()}) {
    auto r = realize_quiver(q);
    CHECK(r.object.labels == q.vertices());
    CHECK(same_arrows(gabriel_quiver(r.model, r.object), q));
  }
  CHECK_THROWS_AS(realize_quiver(fixture_quiver("not_dynkin.json")), NotDynkinError);
}

TEST_CASE("cells") {
  D5Grid fig;
  auto cells = cell_decomposition(fig.model, fig.object);
  std::vector<std::vector<std::size_t>> expected{{0}, {1, 2}, {3, 4}};
  CHECK(cells.cells == expected);
  CHECK(cells.cell_of == std::vector<std::size_t>{0, 1, 1, 2, 2});

  ClusterModel a3 = ClusterModel::build(fix_a3l());
  CHECK(cell_decomposition(a3, projective_object(a3)).cells.size() == 1);
  ClusterModel a1 = ClusterModel::build(dynkin_quiver(type("A1")));
  CHECK(cell_decomposition(a1, projective_object(a1)).cells.size() == 1);
}
