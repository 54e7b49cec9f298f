#include "tiltforge/slices.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "tiltforge/errors.hpp"

namespace tiltforge {

namespace {

bool sorted_contains(const std::vector<CVertex>& v, const CVertex& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::vector<CVertex> sorted_unique(std::vector<CVertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<CVertex> minus(const std::vector<CVertex>& a, const std::vector<CVertex>& b) {
  std::vector<CVertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool intersects(const std::vector<CVertex>& a, const std::vector<CVertex>& b) {
  for (const auto& x : a)
    if (sorted_contains(b, x)) return true;
  return false;
}

}  // namespace

bool LocalSlice::contains(const CVertex& v) const { return sorted_contains(members, v); }

LocalSlice make_slice(std::vector<CVertex> members) { return {sorted_unique(std::move(members))}; }

SliceContext::SliceContext(ClusterModel m, CTObject t) : m_(std::move(m)), t_(std::move(t)) {
  q_ = gabriel_quiver(m_, t_);
  init();
}

SliceContext::SliceContext(ClusterModel m, CTObject t, Quiver q_b)
    : m_(std::move(m)), t_(std::move(t)), q_(std::move(q_b)) {
  if (q_.vertices() != t_.labels) throw InputError("quiver vertices do not match the summand labels");
  if (!same_arrows(gabriel_quiver(m_, t_), q_)) throw InputError("quiver is not the Gabriel quiver of the object");
  init();
}

void SliceContext::init() {
  if (!is_cluster_tilting(m_, t_.summands)) throw InputError("object is not cluster-tilting");
  cells_ = cell_decomposition(m_, t_);
  for (const auto& x : t_.summands) tau_t_.push_back(m_.tau(x));
  tau_t_ = sorted_unique(tau_t_);

  const std::size_t n = t_.size();
  tau_i_.assign(n, std::vector<std::vector<CVertex>>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      if (m_.hom_dim(t_.summands[s], t_.summands[t]) == 0) continue;
      std::vector<CVertex> out;
      for (const auto& z : i_set(m_, t_.summands[s], t_.summands[t])) out.push_back(m_.tau(z));
      tau_i_[s][t] = sorted_unique(std::move(out));
    }

  // sections of ZQ rooted in orbit 0, projected to C
  const auto& z = m_.derived();
  const auto& seed = m_.seed();
  std::vector<std::size_t> order{0};
  std::vector<std::pair<std::size_t, std::size_t>> tree;  // (child, arrow index)
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < seed.arrows().size(); ++a) {
      const auto& arr = seed.arrows()[a];
      std::size_t other = arr.source == order[i] ? arr.target : arr.target == order[i] ? arr.source : n;
      if (other == n || reached[other]) continue;
      reached[other] = true;
      order.push_back(other);
      tree.push_back({other, a});
    }

  std::map<LocalSlice, std::vector<DVertex>> found;
  std::vector<DVertex> section(n);
  std::function<void(std::size_t)> rec = [&](std::size_t e) {
    if (e == tree.size()) {
      std::vector<CVertex> members;
      for (const auto& v : section) members.push_back(m_.canonicalize(v));
      LocalSlice s = make_slice(members);
      require(s.members.size() == n, "section does not project injectively");
      for (const auto& x : s.members)
        if (forbidden(x)) return;
      found.try_emplace(std::move(s), section);
      return;
    }
    auto [child, a] = tree[e];
    const auto& arr = seed.arrows()[a];
    if (arr.source == child) {
      // child -> parent in Q: (parent,m) -> (child,m) or (child,m-1) -> (parent,m)
      int m = section[arr.target].offset;
      for (int off : {m - 1, m}) {
        section[child] = {child, off};
        rec(e + 1);
      }
    } else {
      // parent -> child in Q: (child,m) -> (parent,m) or (parent,m) -> (child,m+1)
      int m = section[arr.source].offset;
      for (int off : {m, m + 1}) {
        section[child] = {child, off};
        rec(e + 1);
      }
    }
  };
  // F may move orbit 0, so a lift need not meet the domain in orbit 0
  const int h = z.coxeter_number();
  for (int r = -h - 2; r <= z.last_module_offset(0) + h + 2; ++r) {
    section[0] = {0, r};
    rec(0);
  }
  for (auto& [s, lift] : found) {
    slices_.push_back(s);
    lifts_.push_back(lift);
  }
}

bool SliceContext::forbidden(const CVertex& v) const { return sorted_contains(tau_t_, v); }

const std::vector<CVertex>& SliceContext::arrow_tau_i(std::size_t arrow) const {
  const auto& a = q_.arrows().at(arrow);
  return tau_i_[a.target][a.source];
}

bool SliceContext::is_legal_slice(const LocalSlice& s) const {
  return std::binary_search(slices_.begin(), slices_.end(), s);
}

std::vector<LocalSlice> enumerate_local_slices(const SliceContext& ctx) { return ctx.slices(); }

std::vector<CVertex> i_set(const ClusterModel& m, const CVertex& x, const CVertex& y) {
  const auto& z = m.derived();
  const auto& fx = z.functor_from(x.rep);
  std::vector<CVertex> out;
  for (const auto& v : m.vertices()) {
    bool hit = false;
    for (int k = 0; k <= 1 && !hit; ++k) {
      const DVertex mid = m.lift(v, k);
      const std::size_t dm = fx.dim(mid);
      if (dm == 0) continue;
      const auto& fm = z.functor_from(mid);
      for (int l = k; l <= k + 1 && !hit; ++l) {
        const auto* node = fm.node(m.lift(y, l));
        if (!node) continue;
        for (std::size_t i = 0; i < dm && !hit; ++i) {
          Vector e(dm, Rational(0));
          e[i] = 1;
          for (const auto& p : node->basis)
            if (!is_zero(fx.push_along(e, p))) {
              hit = true;
              break;
            }
        }
      }
    }
    if (hit) out.push_back(v);
  }
  return out;
}

bool arrow_on_cycle(const SliceContext& ctx, std::size_t arrow) {
  const auto& a = ctx.quiver().arrows().at(arrow);
  const auto& t = ctx.object().summands;
  std::vector<CVertex> ends = sorted_unique({ctx.model().tau(t[a.target]), ctx.model().tau(t[a.source])});
  return !minus(ctx.arrow_tau_i(arrow), ends).empty();
}

AdmissibleSet annihilator_set(const SliceContext& ctx, const LocalSlice& s) {
  if (!ctx.is_legal_slice(s)) throw InputError("not a legal local slice");
  AdmissibleSet out;
  for (std::size_t a = 0; a < ctx.quiver().arrows().size(); ++a)
    if (intersects(s.members, ctx.arrow_tau_i(a))) out.arrows.push_back(a);
  require(is_admissible(ctx.quiver(), out), "annihilator set is not admissible");
  return out;
}

std::vector<CVertex> span_arrow(const SliceContext& ctx, std::size_t arrow) {
  std::vector<CVertex> out;
  for (const auto& s : ctx.slices())
    if (intersects(s.members, ctx.arrow_tau_i(arrow))) out.insert(out.end(), s.members.begin(), s.members.end());
  return sorted_unique(std::move(out));
}

std::vector<CVertex> span_set(const SliceContext& ctx, const AdmissibleSet& s) {
  std::vector<CVertex> out;
  for (const auto& sl : ctx.slices()) out.insert(out.end(), sl.members.begin(), sl.members.end());
  out = sorted_unique(std::move(out));
  for (auto a : s.arrows) {
    auto sp = span_arrow(ctx, a);
    std::vector<CVertex> next;
    std::set_intersection(out.begin(), out.end(), sp.begin(), sp.end(), std::back_inserter(next));
    out = std::move(next);
  }
  return out;
}

std::vector<LocalSlice> supporting_slices(const SliceContext& ctx, const AdmissibleSet& s) {
  std::vector<LocalSlice> out;
  for (const auto& sl : ctx.slices())
    if (annihilator_set(ctx, sl) == s) out.push_back(sl);
  return out;
}

std::vector<LocalSlice> slices_in_span(const SliceContext& ctx, const AdmissibleSet& s) {
  auto sp = span_set(ctx, s);
  std::vector<LocalSlice> out;
  for (const auto& sl : ctx.slices())
    if (std::includes(sp.begin(), sp.end(), sl.members.begin(), sl.members.end())) out.push_back(sl);
  return out;
}

bool is_tilted_admissible(const SliceContext& ctx, const AdmissibleSet& s) {
  if (!is_admissible(ctx.quiver(), s)) throw InputError("arrow set is not admissible");
  return !supporting_slices(ctx, s).empty();
}

bool can_move(const SliceContext& ctx, const LocalSlice& s, const CVertex& x, Direction d) {
  if (!s.contains(x)) return false;
  const auto& m = ctx.model();
  const auto& nbrs = d == Direction::plus ? m.successors(x) : m.predecessors(x);
  for (const auto& y : nbrs)
    if (s.contains(y)) return false;
  const CVertex moved = d == Direction::plus ? m.tau(x) : m.tau_inv(x);
  return !ctx.forbidden(moved) && !s.contains(moved);
}

LocalSlice move_slice(const SliceContext& ctx, const LocalSlice& s, const CVertex& x, Direction d) {
  if (!can_move(ctx, s, x, d)) throw InputError("illegal slice move at " + ctx.model().describe(x));
  auto members = s.members;
  std::erase(members, x);
  members.push_back(d == Direction::plus ? ctx.model().tau(x) : ctx.model().tau_inv(x));
  LocalSlice out = make_slice(std::move(members));
  require(ctx.is_legal_slice(out), "slice move left the set of local slices");
  return out;
}

std::vector<LocalSlice> homotopy_class(const SliceContext& ctx, const LocalSlice& s) {
  if (!ctx.is_legal_slice(s)) throw InputError("not a legal local slice");
  std::set<LocalSlice> seen{s};
  std::deque<LocalSlice> queue{s};
  while (!queue.empty()) {
    LocalSlice cur = queue.front();
    queue.pop_front();
    for (const auto& x : cur.members)
      for (auto d : {Direction::plus, Direction::minus})
        if (can_move(ctx, cur, x, d)) {
          LocalSlice next = move_slice(ctx, cur, x, d);
          if (seen.insert(next).second) queue.push_back(std::move(next));
        }
  }
  return {seen.begin(), seen.end()};
}

bool homotopic(const SliceContext& ctx, const LocalSlice& a, const LocalSlice& b) {
  auto cls = homotopy_class(ctx, a);
  return std::binary_search(cls.begin(), cls.end(), b);
}

namespace {

LocalSlice extreme_representative(const SliceContext& ctx, const LocalSlice& s, Direction d) {
  if (!ctx.is_legal_slice(s)) throw InputError("not a legal local slice");
  LocalSlice cur = s;
  const std::size_t cap = 4 * ctx.model().vertices().size() * ctx.model().vertices().size() + 16;
  for (std::size_t step = 0; step < cap; ++step) {
    auto it = std::find_if(cur.members.begin(), cur.members.end(),
                           [&](const CVertex& x) { return can_move(ctx, cur, x, d); });
    if (it == cur.members.end()) return cur;
    cur = move_slice(ctx, cur, *it, d);
  }
  throw InternalError("slice moves do not terminate");
}

}  // namespace

LocalSlice rightmost_representative(const SliceContext& ctx, const LocalSlice& s) {
  return extreme_representative(ctx, s, Direction::minus);
}

LocalSlice leftmost_representative(const SliceContext& ctx, const LocalSlice& s) {
  return extreme_representative(ctx, s, Direction::plus);
}

namespace {

std::vector<std::size_t> relative_extremes(const SliceContext& ctx, const LocalSlice& s, bool sources) {
  const auto& cells = ctx.cells().cells;
  const auto& t = ctx.object().summands;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    bool ok = true;
    for (std::size_t j = 0; j < cells.size() && ok; ++j) {
      if (j == k) continue;
      const auto& from = sources ? cells[j] : cells[k];
      const auto& to = sources ? cells[k] : cells[j];
      bool hom = false, met = false;
      for (auto a : from)
        for (auto b : to) {
          if (ctx.model().hom_dim(t[a], t[b]) == 0) continue;
          hom = true;
          met = met || intersects(s.members, ctx.tau_i(a, b));
        }
      ok = !hom || met;
    }
    if (ok) out.push_back(k);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> relative_sources(const SliceContext& ctx, const LocalSlice& s) {
  return relative_extremes(ctx, s, true);
}

std::vector<std::size_t> relative_sinks(const SliceContext& ctx, const LocalSlice& s) {
  return relative_extremes(ctx, s, false);
}

JumpSets jump_sets(const ClusterModel& m, const std::vector<CVertex>& trench) {
  const auto x = sorted_unique(trench);
  std::vector<CVertex> before, after;
  for (const auto& v : x) {
    for (const auto& w : m.predecessors(v)) before.push_back(w);
    for (const auto& w : m.successors(v)) after.push_back(w);
  }
  before = minus(sorted_unique(before), x);
  after = minus(sorted_unique(after), x);

  std::vector<CVertex> left = before, right = after;
  for (const auto& v : x) {
    left.push_back(m.tau(v));
    right.push_back(m.tau_inv(v));
  }
  for (const auto& w : before)
    for (const auto& u : m.successors(w)) left.push_back(u);
  for (const auto& w : after)
    for (const auto& u : m.predecessors(w)) right.push_back(u);
  return {minus(sorted_unique(left), x), minus(sorted_unique(right), x)};
}

LocalSlice jump(const SliceContext& ctx, const LocalSlice& s, const std::vector<CVertex>& trench, Direction d) {
  auto sets = jump_sets(ctx.model(), trench);
  const auto& drop = d == Direction::minus ? sets.left : sets.right;
  const auto& add = d == Direction::minus ? sets.right : sets.left;
  if (!std::includes(s.members.begin(), s.members.end(), drop.begin(), drop.end()))
    throw InputError("slice does not contain the jump set");
  auto members = minus(s.members, drop);
  members.insert(members.end(), add.begin(), add.end());
  LocalSlice out = make_slice(std::move(members));
  require(ctx.is_legal_slice(out), "jump does not produce a legal local slice");
  return out;
}

LocalSlice complete_to_slice(const SliceContext& ctx, const std::vector<CVertex>& partial) {
  return complete_to_slice(ctx, partial, ctx.slices());
}

LocalSlice complete_to_slice(const SliceContext& ctx, const std::vector<CVertex>& partial,
                             const std::vector<LocalSlice>& candidates) {
  if (partial.empty()) throw InputError("empty partial slice");
  const auto want = sorted_unique(partial);
  const auto& z = ctx.model().derived();
  const long n = static_cast<long>(ctx.model().rank());
  std::optional<std::size_t> best;
  long best_score = 0;
  for (std::size_t i = 0; i < ctx.slices().size(); ++i) {
    const auto& s = ctx.slices()[i];
    if (!std::binary_search(candidates.begin(), candidates.end(), s)) continue;
    if (!std::includes(s.members.begin(), s.members.end(), want.begin(), want.end())) continue;
    long total = 0, anchor = 0;
    for (const auto& v : ctx.lifts()[i]) {
      total += z.position(v);
      if (ctx.model().canonicalize(v) == want.front()) anchor = z.position(v);
    }
    long score = total - n * anchor;
    if (!best || score < best_score) {
      best = i;
      best_score = score;
    }
  }
  if (!best) throw InputError("partial slice cannot be completed");
  return ctx.slices()[*best];
}

}  // namespace tiltforge
