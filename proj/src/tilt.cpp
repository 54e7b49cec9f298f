#include "tiltforge/tilt.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "tiltforge/errors.hpp"

namespace tiltforge {

AdmissibleSet apr_transform(const Quiver& q, const AdmissibleSet& s, const std::vector<std::size_t>& cell) {
  auto inside = [&](std::size_t v) { return std::find(cell.begin(), cell.end(), v) != cell.end(); };
  AdmissibleSet out;
  for (auto a : s.arrows) {
    const auto& arr = q.arrows().at(a);
    if (inside(arr.source) && !inside(arr.target)) continue;
    out.arrows.push_back(a);
  }
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    if (!inside(arr.source) && inside(arr.target)) out.arrows.push_back(a);
  }
  std::sort(out.arrows.begin(), out.arrows.end());
  out.arrows.erase(std::unique(out.arrows.begin(), out.arrows.end()), out.arrows.end());
  require(is_admissible(q, out), "APR transform is not admissible");
  return out;
}

std::vector<std::size_t> cell_vertices(const SliceContext& ctx, std::size_t cell) {
  return ctx.cells().cells.at(cell);
}

std::vector<std::string> cell_labels(const SliceContext& ctx, std::size_t cell) {
  std::vector<std::string> out;
  for (auto i : ctx.cells().cells.at(cell)) out.push_back(ctx.object().labels[i]);
  return out;
}

std::vector<CVertex> trench(const SliceContext& ctx, std::size_t cell) {
  std::vector<CVertex> out;
  for (auto i : ctx.cells().cells.at(cell)) out.push_back(ctx.model().tau(ctx.object().summands[i]));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<LocalSlice> jump_start(const SliceContext& ctx, const LocalSlice& s, std::size_t cell, Direction d) {
  const auto sets = jump_sets(ctx.model(), trench(ctx, cell));
  const auto& near = d == Direction::minus ? sets.left : sets.right;
  try {
    return complete_to_slice(ctx, near, homotopy_class(ctx, s));
  } catch (const InputError&) {
    return std::nullopt;
  }
}

bool jumpable(const SliceContext& ctx, const LocalSlice& rightmost, std::size_t cell) {
  auto src = relative_sources(ctx, rightmost);
  if (std::find(src.begin(), src.end(), cell) == src.end()) return false;
  for (auto i : ctx.cells().cells.at(cell)) {
    const CVertex x = ctx.object().summands[i];
    if (!rightmost.contains(ctx.model().tau(ctx.model().tau(x)))) return false;
  }
  return jump_start(ctx, rightmost, cell, Direction::minus).has_value();
}

bool jumpable_left(const SliceContext& ctx, const LocalSlice& leftmost, std::size_t cell) {
  auto snk = relative_sinks(ctx, leftmost);
  if (std::find(snk.begin(), snk.end(), cell) == snk.end()) return false;
  for (auto i : ctx.cells().cells.at(cell))
    if (!leftmost.contains(ctx.object().summands[i])) return false;
  return jump_start(ctx, leftmost, cell, Direction::plus).has_value();
}

namespace {

AlgorithmResult closure(const SliceContext& ctx, Direction d, std::size_t cap) {
  if (ctx.slices().empty()) throw InternalError("no legal local slice");
  if (cap == 0) cap = admissible_sets(ctx.quiver()).size();
  AlgorithmResult r;
  r.quiver = ctx.quiver();
  const LocalSlice& first = ctx.slices().front();
  r.presentations.push_back({annihilator_set(ctx, first), {}, first});
  std::map<AdmissibleSet, std::size_t> index{{r.presentations[0].relations, 0}};
  const bool right = d == Direction::minus;

  for (std::size_t p = 0; p < r.presentations.size(); ++p) {
    const AdmissibleSet s = r.presentations[p].relations;
    const LocalSlice base = right ? rightmost_representative(ctx, r.presentations[p].slice)
                                  : leftmost_representative(ctx, r.presentations[p].slice);
    for (std::size_t c = 0; c < ctx.cells().cells.size(); ++c) {
      if (right ? !jumpable(ctx, base, c) : !jumpable_left(ctx, base, c)) continue;
      const auto x = trench(ctx, c);
      const LocalSlice start = *jump_start(ctx, base, c, d);
      require(annihilator_set(ctx, start) == s, "completed jump set has a different annihilator");
      const LocalSlice jumped = jump(ctx, start, x, d);

      std::vector<std::size_t> moved = cell_vertices(ctx, c);
      if (!right) {
        std::vector<std::size_t> rest;
        for (std::size_t v = 0; v < ctx.quiver().vertex_count(); ++v)
          if (std::find(moved.begin(), moved.end(), v) == moved.end()) rest.push_back(v);
        moved = rest;
      }
      const AdmissibleSet next = apr_transform(ctx.quiver(), s, moved);
      require(annihilator_set(ctx, jumped) == next, "jumped slice does not realize the APR transform");

      auto [it, fresh] = index.try_emplace(next, r.presentations.size());
      if (fresh) {
        if (r.presentations.size() >= cap) throw InternalError("jump closure exceeds the number of admissible sets");
        auto path = r.presentations[p].jump_path;
        path.push_back(cell_labels(ctx, c));
        r.presentations.push_back({next, std::move(path), jumped});
      }
      r.edges.push_back({p, it->second, cell_labels(ctx, c)});
    }
  }
  return r;
}

}  // namespace

AlgorithmResult maximal_tilted_subalgebras(const SliceContext& ctx, std::size_t max_presentations) {
  return closure(ctx, Direction::minus, max_presentations);
}

AlgorithmResult leftward_pass(const SliceContext& ctx, std::size_t max_presentations) {
  return closure(ctx, Direction::plus, max_presentations);
}

AlgorithmResult maximal_tilted_subalgebras(const Quiver& q_b, std::size_t max_states) {
  auto real = realize_quiver(q_b, max_states);
  SliceContext ctx(std::move(real.model), std::move(real.object), q_b);
  return maximal_tilted_subalgebras(ctx);
}

std::vector<AdmissibleSet> relation_sets(const AlgorithmResult& r) {
  std::vector<AdmissibleSet> out;
  for (const auto& p : r.presentations) out.push_back(p.relations);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tiltforge
