#include "tiltforge/derived.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "tiltforge/errors.hpp"

namespace tiltforge {

struct ZModel::Cache {
  std::mutex mutex;
  std::map<DVertex, std::unique_ptr<HomFunctor>> functors;
};

namespace {

std::string show(const DVertex& v) { return "(" + std::to_string(v.orbit) + "," + std::to_string(v.offset) + ")"; }

bool sign_coherent(const std::vector<long>& d) {
  bool pos = false, neg = false;
  for (long x : d) {
    pos = pos || x > 0;
    neg = neg || x < 0;
  }
  return !(pos && neg);
}

}  // namespace

std::size_t HomFunctor::dim(const DVertex& y) const {
  auto it = nodes_.find(y);
  return it == nodes_.end() ? 0 : it->second.basis.size();
}

const HomFunctor::Node* HomFunctor::node(const DVertex& y) const {
  auto it = nodes_.find(y);
  return it == nodes_.end() ? nullptr : &it->second;
}

Vector HomFunctor::push_along(const Vector& f, const Path& p) const {
  require(!p.empty(), "empty path");
  Vector zero(dim(p.back()), Rational(0));
  if (dim(p.front()) == 0) return zero;
  require(f.size() == dim(p.front()), "morphism does not match the path start");
  Vector cur = f;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const Node* n = node(p[i]);
    if (!n) return zero;
    auto it = n->incoming.find(p[i - 1]);
    if (it == n->incoming.end()) return zero;
    cur = it->second.apply(cur);
  }
  return cur;
}

std::vector<DVertex> ZModel::predecessors(const DVertex& v) const {
  std::vector<DVertex> out;
  for (const auto& a : seed_.arrows()) {
    if (a.source == v.orbit) out.push_back({a.target, v.offset});
    if (a.target == v.orbit) out.push_back({a.source, v.offset - 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DVertex> ZModel::successors(const DVertex& v) const {
  std::vector<DVertex> out;
  for (const auto& a : seed_.arrows()) {
    if (a.target == v.orbit) out.push_back({a.source, v.offset});
    if (a.source == v.orbit) out.push_back({a.target, v.offset + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

DVertex ZModel::apply(Auto which, const DVertex& v) const {
  switch (which) {
    case Auto::tau: return {v.orbit, v.offset - 1};
    case Auto::tau_inv: return {v.orbit, v.offset + 1};
    case Auto::nu: return {nu_orbit_[v.orbit], nu_offset_[v.orbit] + v.offset};
    case Auto::shift: return {nu_orbit_[v.orbit], nu_offset_[v.orbit] + v.offset + 1};
    case Auto::F: return {nu_orbit_[v.orbit], nu_offset_[v.orbit] + v.offset + 2};
    case Auto::F_inv: {
      std::size_t i = nu_orbit_inv_[v.orbit];
      return {i, v.offset - nu_offset_[i] - 2};
    }
  }
  throw InternalError("unknown automorphism");
}

bool ZModel::is_module(const DVertex& v) const {
  return v.offset >= 0 && v.offset <= last_module_[v.orbit];
}

const std::vector<long>& ZModel::dimension_vector(const DVertex& v) const {
  auto it = dims_.find(v);
  if (it == dims_.end()) throw InputError("vertex " + show(v) + " lies outside the window");
  return it->second;
}

ZModel ZModel::build(const Quiver& seed) {
  auto type = classify_dynkin(seed);
  if (!type) throw NotDynkinError("seed quiver is not a Dynkin quiver");
  if (!seed.is_acyclic()) throw NotDynkinError("seed quiver has an oriented cycle");
  ZModel m;
  m.seed_ = seed;
  m.type_ = *type;
  m.h_ = type->coxeter_number();
  const std::size_t n = seed.vertex_count();

  // height: d(source) = d(target) + 1
  m.height_.assign(n, 0);
  std::vector<bool> set(n, false);
  set[0] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& a : seed.arrows()) {
      if (set[a.target] && !set[a.source]) {
        m.height_[a.source] = m.height_[a.target] + 1;
        set[a.source] = changed = true;
      } else if (set[a.source] && !set[a.target]) {
        m.height_[a.target] = m.height_[a.source] - 1;
        set[a.target] = changed = true;
      }
    }
  }
  int lo = *std::min_element(m.height_.begin(), m.height_.end());
  for (auto& d : m.height_) d -= lo;

  // paths[j][i] = number of paths j -> i in Q
  std::vector<std::size_t> topo(n);
  for (std::size_t i = 0; i < n; ++i) topo[i] = i;
  std::sort(topo.begin(), topo.end(), [&](auto a, auto b) { return m.height_[a] > m.height_[b]; });
  std::vector<std::vector<long>> paths(n, std::vector<long>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    paths[j][j] = 1;
    for (std::size_t v : topo)
      for (const auto& a : seed.arrows())
        if (a.source == v) paths[j][a.target] += paths[j][v];
  }

  std::vector<DVertex> forward, backward;
  for (std::size_t i = 0; i < n; ++i) {
    m.dims_[{i, 0}] = paths[i];
    for (int k = 1; k <= m.window_hi(); ++k) forward.push_back({i, k});
    for (int k = -1; k >= m.window_lo(); --k) backward.push_back({i, k});
  }
  std::sort(forward.begin(), forward.end(),
            [&](const DVertex& a, const DVertex& b) { return m.position(a) < m.position(b); });
  std::sort(backward.begin(), backward.end(),
            [&](const DVertex& a, const DVertex& b) { return m.position(a) > m.position(b); });
  for (const auto& v : forward) {
    std::vector<long> d = m.dims_.at({v.orbit, v.offset - 1});
    for (auto& x : d) x = -x;
    for (const auto& w : m.predecessors(v))
      for (std::size_t c = 0; c < n; ++c) d[c] += m.dims_.at(w)[c];
    m.dims_[v] = d;
  }
  for (const auto& v : backward) {
    DVertex up{v.orbit, v.offset + 1};
    std::vector<long> d = m.dims_.at(up);
    for (auto& x : d) x = -x;
    for (const auto& w : m.predecessors(up))
      for (std::size_t c = 0; c < n; ++c) d[c] += m.dims_.at(w)[c];
    m.dims_[v] = d;
  }
  for (const auto& [v, d] : m.dims_)
    require(sign_coherent(d), "dimension vector at " + show(v) + " is not sign-coherent");

  m.nu_orbit_.assign(n, 0);
  m.nu_offset_.assign(n, 0);
  m.nu_orbit_inv_.assign(n, n);
  m.last_module_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> inj(n);
    for (std::size_t j = 0; j < n; ++j) inj[j] = paths[j][i];
    bool found = false;
    for (const auto& [v, d] : m.dims_) {
      // the same vector reappears after [2]; keep the first occurrence
      if (v.offset < 0 || d != inj) continue;
      if (found && m.nu_offset_[i] <= v.offset) continue;
      require(!found || m.nu_offset_[i] != v.offset, "injective located twice");
      found = true;
      m.nu_orbit_[i] = v.orbit;
      m.nu_offset_[i] = v.offset;
    }
    require(found, "injective not located in the window");
    require(m.nu_orbit_inv_[m.nu_orbit_[i]] == n, "Nakayama permutation is not a bijection");
    m.nu_orbit_inv_[m.nu_orbit_[i]] = i;
    m.last_module_[m.nu_orbit_[i]] = m.nu_offset_[i];
  }
  m.cache_ = std::make_shared<Cache>();
  return m;
}

HomFunctor ZModel::compute_functor(const DVertex& x) const {
  HomFunctor f;
  f.source_ = x;
  const int phi_lo = position(x);
  f.phi_hi_ = phi_lo + 2 * h_;
  std::vector<DVertex> region;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (int m = (phi_lo - height_[i]) / 2 - 1;; ++m) {
      DVertex v{i, m};
      if (position(v) < phi_lo) continue;
      if (position(v) > f.phi_hi_) break;
      region.push_back(v);
    }
  }
  std::sort(region.begin(), region.end(), [&](const DVertex& a, const DVertex& b) {
    return std::make_pair(position(a), a) < std::make_pair(position(b), b);
  });

  for (const auto& z : region) {
    if (z == x) {
      f.nodes_[z].basis = {{x}};
      continue;
    }
    if (position(z) == phi_lo) continue;
    struct Block {
      DVertex w;
      const HomFunctor::Node* node;
      std::size_t start;
    };
    std::vector<Block> blocks;
    std::size_t total = 0;
    for (const auto& w : predecessors(z)) {
      const auto* nw = f.node(w);
      if (!nw) continue;
      blocks.push_back({w, nw, total});
      total += nw->basis.size();
    }
    if (total == 0) continue;

    const DVertex tz{z.orbit, z.offset - 1};
    const std::size_t dt = f.dim(tz);
    SpanBuilder span(total);
    std::vector<Vector> image_basis;
    for (std::size_t c = 0; c < dt; ++c) {
      Vector unit(dt, Rational(0));
      unit[c] = 1;
      Vector col(total, Rational(0));
      for (const auto& b : blocks) {
        auto it = b.node->incoming.find(tz);
        if (it == b.node->incoming.end()) continue;
        Vector part = it->second.apply(unit);
        for (std::size_t r = 0; r < part.size(); ++r) col[b.start + r] = part[r];
      }
      if (span.add(col)) image_basis.push_back(col);
    }
    std::vector<std::size_t> chosen;
    for (std::size_t s = 0; s < total; ++s) {
      Vector e(total, Rational(0));
      e[s] = 1;
      if (span.add(e)) chosen.push_back(s);
    }
    if (chosen.empty()) continue;

    Matrix basis(total, total);
    for (std::size_t c = 0; c < image_basis.size(); ++c)
      for (std::size_t r = 0; r < total; ++r) basis.at(r, c) = image_basis[c][r];
    for (std::size_t c = 0; c < chosen.size(); ++c) basis.at(chosen[c], image_basis.size() + c) = 1;
    Matrix inv = inverse(basis);

    HomFunctor::Node node;
    for (std::size_t s : chosen) {
      auto b = std::find_if(blocks.rbegin(), blocks.rend(), [&](const Block& bl) { return bl.start <= s; });
      Path p = b->node->basis[s - b->start];
      p.push_back(z);
      node.basis.push_back(std::move(p));
    }
    for (const auto& b : blocks) {
      Matrix a(chosen.size(), b.node->basis.size());
      for (std::size_t r = 0; r < chosen.size(); ++r)
        for (std::size_t c = 0; c < b.node->basis.size(); ++c)
          a.at(r, c) = inv.at(image_basis.size() + r, b.start + c);
      node.incoming.emplace(b.w, std::move(a));
    }
    f.nodes_.emplace(z, std::move(node));
  }
  return f;
}

const HomFunctor& ZModel::functor_from(const DVertex& x) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& slot = cache_->functors[x];
  if (!slot) slot = std::make_unique<HomFunctor>(compute_functor(x));
  return *slot;
}

MorphismSpace ZModel::hom_unchecked(const DVertex& x, const DVertex& y) const {
  const auto* n = functor_from(x).node(y);
  return {x, y, n ? n->basis : std::vector<Path>{}};
}

MorphismSpace ZModel::hom(const DVertex& x, const DVertex& y) const {
  if (x.orbit >= rank() || y.orbit >= rank()) throw InputError("unknown orbit");
  if (!in_window(x) || !in_window(y))
    throw InputError("hom request " + show(x) + " -> " + show(y) + " lies outside the window");
  return hom_unchecked(x, y);
}

Morphism ZModel::compose(const Morphism& f, const Morphism& g) const {
  require(f.target == g.source, "composing non-composable morphisms");
  const auto& fx = functor_from(f.source);
  const auto& fy = functor_from(g.source);
  const auto* gnode = fy.node(g.target);
  Morphism out{f.source, g.target, Vector(fx.dim(g.target), Rational(0))};
  if (!gnode) return out;
  require(g.coords.size() == gnode->basis.size(), "morphism has the wrong dimension");
  for (std::size_t j = 0; j < g.coords.size(); ++j) {
    if (sgn(g.coords[j]) == 0) continue;
    Vector part = fx.push_along(f.coords, gnode->basis[j]);
    for (std::size_t r = 0; r < part.size(); ++r) out.coords[r] += g.coords[j] * part[r];
  }
  return out;
}

ZModel build_zmodel(const Quiver& q) { return ZModel::build(q); }
MorphismSpace hom_d(const ZModel& m, const DVertex& x, const DVertex& y) { return m.hom(x, y); }
Morphism compose_d(const ZModel& m, const Morphism& f, const Morphism& g) { return m.compose(f, g); }
DVertex apply_auto(const ZModel& m, Auto which, const DVertex& v) { return m.apply(which, v); }
Morphism identity_morphism(const DVertex& x) { return {x, x, Vector{Rational(1)}}; }

}  // namespace tiltforge
