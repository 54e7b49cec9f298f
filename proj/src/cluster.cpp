#include "tiltforge/cluster.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tiltforge/errors.hpp"

namespace tiltforge {

std::size_t HomC::dimension() const {
  std::size_t d = 0;
  for (const auto& c : components) d += c.dimension();
  return d;
}

ClusterModel ClusterModel::build(const Quiver& seed) {
  ClusterModel m;
  m.z_ = ZModel::build(seed);
  const auto& z = m.z_;
  for (std::size_t j = 0; j < z.rank(); ++j)
    for (int k = 0; k <= z.last_module_offset(j) + 1; ++k) m.vertices_.push_back({{j, k}});
  std::sort(m.vertices_.begin(), m.vertices_.end(), [&](const CVertex& a, const CVertex& b) {
    return std::make_pair(z.position(a.rep), a.rep.orbit) < std::make_pair(z.position(b.rep), b.rep.orbit);
  });
  for (std::size_t i = 0; i < m.vertices_.size(); ++i) m.index_[m.vertices_[i].rep] = i;

  const std::size_t n = m.vertices_.size();
  m.succ_.resize(n);
  m.pred_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& w : z.successors(m.vertices_[i].rep)) m.succ_[i].push_back(m.canonicalize(w));
    for (const auto& w : z.predecessors(m.vertices_[i].rep)) m.pred_[i].push_back(m.canonicalize(w));
    std::sort(m.succ_[i].begin(), m.succ_[i].end());
    std::sort(m.pred_[i].begin(), m.pred_[i].end());
  }

  m.hom_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& fx = z.functor_from(m.vertices_[i].rep);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t d = 0;
      for (int l = -1; l <= 2; ++l) {
        std::size_t part = fx.dim(m.lift(m.vertices_[j], l));
        if (l == -1 || l == 2) require(part == 0, "orbit overflow in Hom_C");
        d += part;
      }
      m.hom_[i * n + j] = d;
    }
  }
  return m;
}

std::size_t ClusterModel::index(const CVertex& v) const {
  auto it = index_.find(v.rep);
  require(it != index_.end(), "vertex is not a domain representative");
  return it->second;
}

bool ClusterModel::in_domain(const DVertex& v) const { return index_.count(v) > 0; }

CVertex ClusterModel::canonicalize(const DVertex& v) const {
  DVertex cur = v;
  for (int step = 0; step < 1000; ++step) {
    if (in_domain(cur)) return {cur};
    cur = cur.offset < 0 ? z_.apply(Auto::F, cur) : z_.apply(Auto::F_inv, cur);
  }
  throw InternalError("canonicalization does not terminate");
}

DVertex ClusterModel::lift(const CVertex& v, int power) const {
  DVertex cur = v.rep;
  for (int i = 0; i < power; ++i) cur = z_.apply(Auto::F, cur);
  for (int i = 0; i > power; --i) cur = z_.apply(Auto::F_inv, cur);
  return cur;
}

CVertex ClusterModel::tau(const CVertex& v) const { return canonicalize(z_.apply(Auto::tau, v.rep)); }
CVertex ClusterModel::tau_inv(const CVertex& v) const { return canonicalize(z_.apply(Auto::tau_inv, v.rep)); }
CVertex ClusterModel::shift(const CVertex& v) const { return canonicalize(z_.apply(Auto::shift, v.rep)); }

const std::vector<CVertex>& ClusterModel::successors(const CVertex& v) const { return succ_[index(v)]; }
const std::vector<CVertex>& ClusterModel::predecessors(const CVertex& v) const { return pred_[index(v)]; }

bool ClusterModel::has_arrow(const CVertex& from, const CVertex& to) const {
  const auto& s = successors(from);
  return std::binary_search(s.begin(), s.end(), to);
}

std::size_t ClusterModel::hom_dim(const CVertex& x, const CVertex& y) const {
  return hom_[index(x) * vertices_.size() + index(y)];
}

std::size_t ClusterModel::ext1(const CVertex& x, const CVertex& y) const { return hom_dim(x, shift(y)); }

std::string ClusterModel::describe(const CVertex& v) const {
  return seed().label(v.rep.orbit) + ":" + std::to_string(v.rep.offset);
}

HomC hom_c(const ClusterModel& m, const CVertex& x, const CVertex& y) {
  HomC out{x, y, {}};
  for (int l = 0; l <= 1; ++l) out.components.push_back(m.derived().hom_unchecked(x.rep, m.lift(y, l)));
  return out;
}

std::vector<CMorphism> hom_c_basis(const ClusterModel& m, const CVertex& x, const CVertex& y) {
  HomC h = hom_c(m, x, y);
  std::vector<CMorphism> out;
  for (std::size_t l = 0; l < h.components.size(); ++l)
    for (std::size_t i = 0; i < h.components[l].dimension(); ++i) {
      CMorphism f{x, y, {}};
      for (const auto& c : h.components) f.components.push_back(Vector(c.dimension(), Rational(0)));
      f.components[l][i] = 1;
      out.push_back(std::move(f));
    }
  return out;
}

CMorphism compose_c(const ClusterModel& m, const CMorphism& f, const CMorphism& g) {
  require(f.target == g.source, "composing non-composable morphisms");
  const auto& z = m.derived();
  const auto& fx = z.functor_from(f.source.rep);
  const auto& fy = z.functor_from(g.source.rep);
  CMorphism out{f.source, g.target, {}};
  for (int l = 0; l <= 1; ++l) out.components.push_back(Vector(fx.dim(m.lift(g.target, l)), Rational(0)));
  for (std::size_t k = 0; k < f.components.size(); ++k)
    for (std::size_t l = 0; k + l < out.components.size() && l < g.components.size(); ++l) {
      const auto* gnode = fy.node(m.lift(g.target, static_cast<int>(l)));
      if (!gnode) continue;
      for (std::size_t j = 0; j < gnode->basis.size(); ++j) {
        if (sgn(g.components[l][j]) == 0) continue;
        Path p = gnode->basis[j];
        for (auto& v : p)
          for (std::size_t s = 0; s < k; ++s) v = z.apply(Auto::F, v);
        Vector part = fx.push_along(f.components[k], p);
        for (std::size_t r = 0; r < part.size(); ++r) out.components[k + l][r] += g.components[l][j] * part[r];
      }
    }
  return out;
}

std::size_t ext1_c(const ClusterModel& m, const CVertex& x, const CVertex& y) { return m.ext1(x, y); }

bool is_cluster_tilting(const ClusterModel& m, const std::vector<CVertex>& summands) {
  if (summands.size() != m.rank())
    throw InputError("a cluster-tilting object has exactly " + std::to_string(m.rank()) + " summands");
  for (std::size_t i = 0; i < summands.size(); ++i)
    for (std::size_t j = i; j < summands.size(); ++j) {
      if (i != j && summands[i] == summands[j]) return false;
      if (m.ext1(summands[i], summands[j]) != 0) return false;
    }
  return true;
}

std::size_t CTObject::index(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InputError("unknown summand '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

CTObject projective_object(const ClusterModel& m) {
  CTObject t;
  t.labels = m.seed().vertices();
  for (std::size_t i = 0; i < m.rank(); ++i) t.summands.push_back({m.derived().projective(i)});
  return t;
}

CTObject ct_mutate(const ClusterModel& m, const CTObject& t, const std::string& label) {
  const std::size_t k = t.index(label);
  std::vector<CVertex> found;
  for (const auto& x : m.vertices()) {
    if (std::find(t.summands.begin(), t.summands.end(), x) != t.summands.end()) continue;
    auto s = t.summands;
    s[k] = x;
    if (is_cluster_tilting(m, s)) found.push_back(x);
  }
  require(found.size() == 1, "summand " + label + " does not have exactly one complement");
  CTObject out = t;
  out.summands[k] = found[0];
  return out;
}

Quiver gabriel_quiver(const ClusterModel& m, const CTObject& t) {
  const auto& z = m.derived();
  const std::size_t n = t.size();
  // irreducible morphisms T_a -> T_b: Hom_C modulo rad^2
  auto irreducible = [&](std::size_t a, std::size_t b) {
    const DVertex xa = t.summands[a].rep;
    const auto& fa = z.functor_from(xa);
    std::size_t total = 0;
    for (int l = 0; l <= 1; ++l) {
      const DVertex target = m.lift(t.summands[b], l);
      const std::size_t d = fa.dim(target);
      if (d == 0) continue;
      SpanBuilder rad2(d);
      for (std::size_t c = 0; c < n; ++c)
        for (int k = 0; k <= 1; ++k) {
          const DVertex mid = m.lift(t.summands[c], k);
          const std::size_t dm = fa.dim(mid);
          if (dm == 0 || (c == a && k == 0)) continue;
          if (c == b && k == l) continue;
          const auto* gnode = z.functor_from(mid).node(target);
          if (!gnode) continue;
          for (std::size_t i = 0; i < dm; ++i) {
            Vector e(dm, Rational(0));
            e[i] = 1;
            for (const auto& p : gnode->basis) rad2.add(fa.push_along(e, p));
          }
        }
      std::size_t hom = a == b && l == 0 ? d - 1 : d;
      require(rad2.dimension() <= hom, "rad^2 exceeds the radical");
      total += hom - rad2.dimension();
    }
    return total;
  };

  std::vector<std::pair<std::string, std::string>> arrows;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t c = irreducible(a, b);
      require(a != b || c == 0, "Gabriel quiver has a loop");
      require(c <= 1, "Gabriel quiver has a multiple arrow");
      if (c == 1) arrows.push_back({t.labels[b], t.labels[a]});
    }
  Quiver q = Quiver::from_pairs(t.labels, arrows);
  require(!q.has_two_cycles(), "Gabriel quiver has a 2-cycle");
  return q;
}

std::vector<std::vector<CVertex>> all_cluster_tilting(const ClusterModel& m) {
  std::vector<CVertex> rigid;
  for (const auto& v : m.vertices())
    if (m.ext1(v, v) == 0) rigid.push_back(v);
  std::vector<std::vector<CVertex>> out;
  std::vector<CVertex> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == m.rank()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < rigid.size(); ++i) {
      bool ok = true;
      for (const auto& c : cur) ok = ok && m.ext1(c, rigid[i]) == 0 && m.ext1(rigid[i], c) == 0;
      if (!ok) continue;
      cur.push_back(rigid[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Realization realize_quiver(const Quiver& q_b, std::size_t max_states) {
  auto walk = find_acyclic_in_mutation_class(q_b, max_states);
  ClusterModel m = ClusterModel::build(walk.acyclic);
  CTObject t = projective_object(m);
  require(same_arrows(gabriel_quiver(m, t), walk.acyclic), "projective object does not realize the seed quiver");
  for (auto it = walk.path.rbegin(); it != walk.path.rend(); ++it) t = ct_mutate(m, t, *it);
  require(same_arrows(gabriel_quiver(m, t), q_b), "realized object has the wrong quiver");
  return {std::move(m), std::move(t), walk.path};
}

CellDecomposition cell_decomposition(const ClusterModel& m, const CTObject& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& x : m.vertices()) {
    std::vector<CVertex> mesh = m.predecessors(x);
    mesh.push_back(x);
    mesh.push_back(m.tau(x));
    std::vector<std::size_t> hit;
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(mesh.begin(), mesh.end(), t.summands[i]) != mesh.end()) hit.push_back(i);
    for (std::size_t i = 1; i < hit.size(); ++i) {
      std::size_t a = find(hit[0]), b = find(hit[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  CellDecomposition d;
  d.cell_of.assign(n, 0);
  std::map<std::size_t, std::size_t> root_cell;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    auto [it, fresh] = root_cell.try_emplace(r, d.cells.size());
    if (fresh) d.cells.emplace_back();
    d.cells[it->second].push_back(i);
    d.cell_of[i] = it->second;
  }
  return d;
}

}  // namespace tiltforge
