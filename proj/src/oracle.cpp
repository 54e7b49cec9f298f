#include "tiltforge/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "tiltforge/errors.hpp"
#include "tiltforge/tilt.hpp"

namespace tiltforge {

std::optional<std::string> slice_axiom_violation(const ClusterModel& m, const std::vector<CVertex>& s) {
  std::set<CVertex> in(s.begin(), s.end());
  if (in.size() != m.rank()) return "slice does not have rank many distinct members";
  for (const auto& x : s)
    for (const auto& y : m.successors(x))
      if (!in.count(y) && !in.count(m.tau(y))) return "successor condition fails at " + m.describe(x);
  for (const auto& y : s)
    for (const auto& x : m.predecessors(y))
      if (!in.count(x) && !in.count(m.tau_inv(x))) return "predecessor condition fails at " + m.describe(y);

  const std::size_t cap = m.rank() + 1;
  std::vector<CVertex> path;
  std::optional<std::string> bad;
  // escaped: some vertex after the start of the path lies outside s
  std::function<void(bool)> walk = [&](bool escaped) {
    if (bad || path.size() > cap) return;
    const CVertex cur = path.back();
    for (const auto& next : m.successors(cur)) {
      if (path.size() >= 2 && m.tau(next) == path[path.size() - 2]) continue;
      if (escaped && in.count(next)) {
        bad = "sectional path leaves and re-enters the slice at " + m.describe(next);
        return;
      }
      path.push_back(next);
      walk(escaped || !in.count(next));
      path.pop_back();
    }
  };
  for (const auto& x : s) {
    path = {x};
    walk(false);
    if (bad) return bad;
  }
  return std::nullopt;
}

bool is_local_slice(const ClusterModel& m, const std::vector<CVertex>& s) { return !slice_axiom_violation(m, s); }

std::vector<LocalSlice> brute_force_slices(const ClusterModel& m, const CTObject& t) {
  if (m.rank() > kOracleMaxRank)
    throw InputError("brute-force oracle is limited to rank " + std::to_string(kOracleMaxRank));
  std::set<CVertex> tau_t;
  for (const auto& x : t.summands) tau_t.insert(m.tau(x));
  std::vector<CVertex> pool;
  for (const auto& v : m.vertices())
    if (!tau_t.count(v)) pool.push_back(v);
  std::vector<LocalSlice> out;
  std::vector<CVertex> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == m.rank()) {
      if (is_local_slice(m, cur)) out.push_back(make_slice(cur));
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CVertex> oracle_i_set(const ClusterModel& m, const CVertex& x, const CVertex& y) {
  std::vector<CVertex> out;
  for (const auto& z : m.vertices()) {
    auto fs = hom_c_basis(m, x, z);
    auto gs = hom_c_basis(m, z, y);
    bool hit = false;
    for (const auto& f : fs) {
      for (const auto& g : gs) {
        auto h = compose_c(m, f, g);
        for (const auto& c : h.components) hit = hit || !is_zero(c);
        if (hit) break;
      }
      if (hit) break;
    }
    if (hit) out.push_back(z);
  }
  return out;
}

AdmissibleSet oracle_annihilator(const ClusterModel& m, const CTObject& t, const Quiver& q_b, const LocalSlice& s) {
  AdmissibleSet out;
  for (std::size_t a = 0; a < q_b.arrows().size(); ++a) {
    const auto& arr = q_b.arrows()[a];
    const auto& from = t.summands[t.index(q_b.label(arr.target))];
    const auto& to = t.summands[t.index(q_b.label(arr.source))];
    for (const auto& z : oracle_i_set(m, from, to))
      if (s.contains(m.tau(z))) {
        out.arrows.push_back(a);
        break;
      }
  }
  return out;
}

std::vector<AdmissibleSet> brute_force_maximal_tilted(const ClusterModel& m, const CTObject& t, const Quiver& q_b) {
  std::set<AdmissibleSet> out;
  for (const auto& s : brute_force_slices(m, t)) out.insert(oracle_annihilator(m, t, q_b, s));
  return {out.begin(), out.end()};
}

std::vector<std::vector<LocalSlice>> homotopy_classes_bruteforce(const ClusterModel& m, const CTObject& t) {
  auto slices = brute_force_slices(m, t);
  std::vector<std::size_t> parent(slices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < slices.size(); ++i)
    for (const auto& x : slices[i].members) {
      auto members = slices[i].members;
      std::erase(members, x);
      members.push_back(m.tau(x));
      LocalSlice moved = make_slice(members);
      auto it = std::lower_bound(slices.begin(), slices.end(), moved);
      if (it == slices.end() || *it != moved) continue;
      std::size_t a = find(i), b = find(static_cast<std::size_t>(it - slices.begin()));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<LocalSlice>> groups;
  for (std::size_t i = 0; i < slices.size(); ++i) groups[find(i)].push_back(slices[i]);
  std::vector<std::vector<LocalSlice>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return out;
}

std::size_t hammock_dim(const ZModel& m, const DVertex& x, const DVertex& y) {
  const int lo = m.position(x), hi = m.position(y);
  if (hi < lo) return 0;
  std::map<DVertex, long> value{{x, 1}};
  for (int phi = lo + 1; phi <= hi; ++phi)
    for (std::size_t i = 0; i < m.rank(); ++i) {
      if ((phi - m.height(i)) % 2 != 0) continue;
      DVertex z{i, (phi - m.height(i)) / 2};
      long s = 0;
      for (const auto& w : m.predecessors(z)) {
        auto it = value.find(w);
        if (it != value.end()) s += it->second;
      }
      auto it = value.find({z.orbit, z.offset - 1});
      if (it != value.end()) s -= it->second;
      if (s > 0) value[z] = s;
    }
  auto it = value.find(y);
  return it == value.end() ? 0 : static_cast<std::size_t>(it->second);
}

bool OracleReport::ok() const {
  return enumeration_matches && classes_match_annihilators && arrow_on_cycle_matches && rightward_matches &&
         leftward_matches && rightmost_unique;
}

OracleReport run_oracle(const ClusterModel& m, const CTObject& t, const Quiver& q_b) {
  OracleReport r;
  r.type = m.derived().type().name();
  r.quiver = q_b;
  auto slices = brute_force_slices(m, t);
  auto classes = homotopy_classes_bruteforce(m, t);
  r.slice_count = slices.size();
  r.class_count = classes.size();
  r.maximal_tilted = brute_force_maximal_tilted(m, t, q_b);

  SliceContext ctx(m, t, q_b);
  r.enumeration_matches = ctx.slices() == slices;

  // theorem: slices are homotopic iff they share an annihilator
  std::map<AdmissibleSet, std::size_t> class_of_ann;
  bool consistent = true;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::set<AdmissibleSet> anns;
    for (const auto& s : classes[c]) anns.insert(oracle_annihilator(m, t, q_b, s));
    consistent = consistent && anns.size() == 1;
    for (const auto& a : anns) consistent = consistent && class_of_ann.try_emplace(a, c).second;
  }
  r.classes_match_annihilators = consistent && classes.size() == r.maximal_tilted.size();

  std::set<std::size_t> on_cycle;
  for (const auto& c : full_cycles(q_b)) on_cycle.insert(c.arrows.begin(), c.arrows.end());
  r.arrow_on_cycle_matches = true;
  for (std::size_t a = 0; a < q_b.arrows().size(); ++a)
    r.arrow_on_cycle_matches = r.arrow_on_cycle_matches && arrow_on_cycle(ctx, a) == (on_cycle.count(a) > 0);

  r.rightward_matches = relation_sets(maximal_tilted_subalgebras(ctx)) == r.maximal_tilted;
  r.leftward_matches = relation_sets(leftward_pass(ctx)) == r.maximal_tilted;

  r.rightmost_unique = true;
  for (const auto& cls : classes) {
    std::size_t terminal = 0;
    for (const auto& s : cls) {
      bool stuck = true;
      for (const auto& x : s.members) stuck = stuck && !can_move(ctx, s, x, Direction::minus);
      terminal += stuck;
    }
    r.rightmost_unique = r.rightmost_unique && terminal == 1 &&
                         rightmost_representative(ctx, cls.front()) == rightmost_representative(ctx, cls.back());
  }
  return r;
}

}  // namespace tiltforge
