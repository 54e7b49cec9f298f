#include "tiltforge/quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "tiltforge/errors.hpp"

namespace tiltforge {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> labels(vertices_.begin(), vertices_.end());
  if (labels.size() != vertices_.size()) throw InputError("duplicate vertex label");
  std::set<std::string> ids;
  for (const auto& a : arrows_) {
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw InputError("arrow '" + a.id + "' has an unknown endpoint");
    if (a.source == a.target) throw InputError("loop at vertex " + vertices_[a.source]);
    if (a.id.empty() || !ids.insert(a.id).second) throw InputError("duplicate or empty arrow id '" + a.id + "'");
  }
}

Quiver Quiver::from_pairs(std::vector<std::string> vertices,
                          const std::vector<std::pair<std::string, std::string>>& arrows) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = i;
  std::vector<Arrow> out;
  for (const auto& [from, to] : arrows) {
    auto f = idx.find(from);
    auto t = idx.find(to);
    if (f == idx.end() || t == idx.end()) throw InputError("arrow " + from + "->" + to + " has an unknown endpoint");
    out.push_back({"a" + std::to_string(out.size()), f->second, t->second});
  }
  return Quiver(std::move(vertices), std::move(out));
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::vertex_index(const std::string& label) const {
  auto v = find_vertex(label);
  if (!v) throw InputError("unknown vertex '" + label + "'");
  return *v;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& id) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(std::size_t from, std::size_t to) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].source == from && arrows_[i].target == to) return i;
  return std::nullopt;
}

int Quiver::exchange(std::size_t i, std::size_t j) const {
  int b = 0;
  for (const auto& a : arrows_) {
    if (a.source == i && a.target == j) ++b;
    if (a.source == j && a.target == i) --b;
  }
  return b;
}

std::vector<std::vector<int>> Quiver::exchange_matrix() const {
  std::vector<std::vector<int>> b(vertex_count(), std::vector<int>(vertex_count(), 0));
  for (const auto& a : arrows_) {
    ++b[a.source][a.target];
    --b[a.target][a.source];
  }
  return b;
}

int Quiver::max_multiplicity() const {
  std::map<std::pair<std::size_t, std::size_t>, int> count;
  int best = 0;
  for (const auto& a : arrows_) best = std::max(best, ++count[{a.source, a.target}]);
  return best;
}

bool Quiver::has_two_cycles() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& a : arrows_) seen.insert({a.source, a.target});
  for (const auto& [s, t] : seen)
    if (seen.count({t, s})) return true;
  return false;
}

bool Quiver::is_acyclic() const {
  std::vector<int> indeg(vertex_count(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t done = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++done;
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
  }
  return done == vertex_count();
}

bool Quiver::is_connected() const {
  if (vertices_.empty()) return false;
  std::vector<bool> seen(vertex_count(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& a : arrows_) {
      std::size_t w = a.source == v ? a.target : (a.target == v ? a.source : v);
      if (w != v && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool same_arrows(const Quiver& a, const Quiver& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  std::vector<std::size_t> map(a.vertex_count());
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    auto w = b.find_vertex(a.label(v));
    if (!w) return false;
    map[v] = *w;
  }
  std::multiset<std::pair<std::size_t, std::size_t>> ea, eb;
  for (const auto& x : a.arrows()) ea.insert({map[x.source], map[x.target]});
  for (const auto& x : b.arrows()) eb.insert({x.source, x.target});
  return ea == eb;
}

namespace {

std::string fresh_id(std::set<std::string>& used) {
  for (std::size_t i = 0;; ++i) {
    std::string id = "a" + std::to_string(i);
    if (used.insert(id).second) return id;
  }
}

int sign(int x) { return (x > 0) - (x < 0); }

}  // namespace

Quiver mutate(const Quiver& q, std::size_t k) {
  if (k >= q.vertex_count()) throw InputError("mutation vertex out of range");
  if (q.has_two_cycles()) throw InputError("cannot mutate a quiver with 2-cycles");
  const auto b = q.exchange_matrix();
  const std::size_t n = q.vertex_count();

  std::set<std::string> used;
  for (const auto& a : q.arrows()) used.insert(a.id);

  std::vector<Arrow> kept;
  std::map<std::pair<std::size_t, std::size_t>, int> kept_count;
  std::vector<std::pair<std::size_t, std::size_t>> changed;
  std::map<std::pair<std::size_t, std::size_t>, int> target;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (i == k || j == k) continue;
      int nb = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
      target[{i, j}] = nb;
    }

  for (const auto& a : q.arrows()) {
    if (a.source == k || a.target == k) {
      kept.push_back({a.id, a.target, a.source});
      continue;
    }
    std::size_t i = std::min(a.source, a.target), j = std::max(a.source, a.target);
    int old_b = b[i][j], new_b = target[{i, j}];
    bool forward = a.source == i;
    if (sign(old_b) != sign(new_b)) {
      used.erase(a.id);
      continue;
    }
    int& cnt = kept_count[{i, j}];
    if (cnt < std::abs(new_b) && (forward == (new_b > 0))) {
      ++cnt;
      kept.push_back(a);
    } else {
      used.erase(a.id);
    }
  }
  for (const auto& [pair, nb] : target) {
    auto [i, j] = pair;
    int have = kept_count.count(pair) ? kept_count[pair] : 0;
    for (int c = have; c < std::abs(nb); ++c) {
      std::string id = fresh_id(used);
      if (nb > 0)
        kept.push_back({id, i, j});
      else
        kept.push_back({id, j, i});
    }
  }
  return Quiver(q.vertices(), std::move(kept));
}

Quiver mutate(const Quiver& q, const std::string& label) { return mutate(q, q.vertex_index(label)); }

std::vector<FullCycle> full_cycles(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<std::size_t>> out_arrows(n);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) out_arrows[q.arrows()[a].source].push_back(a);

  std::vector<FullCycle> result;
  std::vector<std::size_t> vpath, apath;
  std::vector<bool> on_path(n, false);

  auto is_full = [&](const std::vector<std::size_t>& vs) {
    std::set<std::size_t> in(vs.begin(), vs.end());
    std::size_t induced = 0;
    for (const auto& a : q.arrows())
      if (in.count(a.source) && in.count(a.target)) ++induced;
    return induced == vs.size();
  };

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t v) {
    for (std::size_t a : out_arrows[v]) {
      std::size_t w = q.arrows()[a].target;
      if (w == start && vpath.size() >= 2) {
        apath.push_back(a);
        if (is_full(vpath)) result.push_back({vpath, apath});
        apath.pop_back();
      } else if (w > start && !on_path[w]) {
        on_path[w] = true;
        vpath.push_back(w);
        apath.push_back(a);
        dfs(start, w);
        apath.pop_back();
        vpath.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    vpath = {s};
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  std::sort(result.begin(), result.end(),
            [](const FullCycle& x, const FullCycle& y) { return x.vertices < y.vertices; });
  return result;
}

bool is_admissible(const Quiver& q, const AdmissibleSet& s) {
  if (!std::is_sorted(s.arrows.begin(), s.arrows.end())) return false;
  if (std::adjacent_find(s.arrows.begin(), s.arrows.end()) != s.arrows.end()) return false;
  for (auto a : s.arrows)
    if (a >= q.arrows().size()) return false;
  auto cycles = full_cycles(q);
  std::set<std::size_t> covered;
  for (const auto& c : cycles) {
    std::size_t hits = 0;
    for (auto a : c.arrows)
      if (std::binary_search(s.arrows.begin(), s.arrows.end(), a)) ++hits;
    if (hits != 1) return false;
    covered.insert(c.arrows.begin(), c.arrows.end());
  }
  for (auto a : s.arrows)
    if (!covered.count(a)) return false;
  return true;
}

std::vector<AdmissibleSet> admissible_sets(const Quiver& q) {
  auto cycles = full_cycles(q);
  std::set<AdmissibleSet> found;
  std::vector<std::size_t> choice;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cycles.size()) {
      AdmissibleSet s{choice};
      std::sort(s.arrows.begin(), s.arrows.end());
      s.arrows.erase(std::unique(s.arrows.begin(), s.arrows.end()), s.arrows.end());
      if (is_admissible(q, s)) found.insert(s);
      return;
    }
    for (auto a : cycles[i].arrows) {
      choice.push_back(a);
      rec(i + 1);
      choice.pop_back();
    }
  };
  rec(0);
  return {found.begin(), found.end()};
}

AdmissibleSet parse_arrow_set(const Quiver& q, const std::string& text) {
  AdmissibleSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    auto pos = item.find("->");
    if (pos == std::string::npos) {
      auto a = q.find_arrow(item);
      if (!a) throw InputError("unknown arrow '" + item + "'");
      s.arrows.push_back(*a);
      continue;
    }
    auto from = q.vertex_index(item.substr(0, pos));
    auto to = q.vertex_index(item.substr(pos + 2));
    auto a = q.find_arrow(from, to);
    if (!a) throw InputError("no arrow " + item);
    s.arrows.push_back(*a);
  }
  std::sort(s.arrows.begin(), s.arrows.end());
  s.arrows.erase(std::unique(s.arrows.begin(), s.arrows.end()), s.arrows.end());
  return s;
}

std::string format_arrow_set(const Quiver& q, const AdmissibleSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.arrows.size(); ++i) {
    const auto& a = q.arrows().at(s.arrows[i]);
    if (i) out += ", ";
    out += q.label(a.source) + "->" + q.label(a.target);
  }
  return out + "}";
}

std::optional<std::vector<std::size_t>> isomorphism(const Quiver& q1, const Quiver& q2) {
  const std::size_t n = q1.vertex_count();
  if (n != q2.vertex_count() || q1.arrows().size() != q2.arrows().size()) return std::nullopt;
  std::vector<std::vector<int>> c1(n, std::vector<int>(n, 0)), c2 = c1;
  for (const auto& a : q1.arrows()) ++c1[a.source][a.target];
  for (const auto& a : q2.arrows()) ++c2[a.source][a.target];
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = c1[i][i] == c2[w][w];
      for (std::size_t j = 0; ok && j < i; ++j)
        ok = c1[i][j] == c2[w][map[j]] && c1[j][i] == c2[map[j]][w];
      if (!ok) continue;
      used[w] = true;
      map[i] = w;
      if (rec(i + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

std::vector<int> canonical_form(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (const auto& a : q.arrows()) ++c[a.source][a.target];

  // colour refinement, then exhaustive search inside colour classes
  std::vector<std::vector<int>> colour(n);
  for (std::size_t v = 0; v < n; ++v) {
    int out = 0, in = 0;
    for (std::size_t w = 0; w < n; ++w) {
      out += c[v][w];
      in += c[w][v];
    }
    colour[v] = {out, in};
  }
  for (int round = 0; round < 2; ++round) {
    std::vector<std::vector<int>> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::vector<int>> outs, ins;
      for (std::size_t w = 0; w < n; ++w) {
        for (int m = 0; m < c[v][w]; ++m) outs.push_back(colour[w]);
        for (int m = 0; m < c[w][v]; ++m) ins.push_back(colour[w]);
      }
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      next[v] = colour[v];
      next[v].push_back(-1);
      for (const auto& o : outs) next[v].insert(next[v].end(), o.begin(), o.end());
      next[v].push_back(-2);
      for (const auto& i : ins) next[v].insert(next[v].end(), i.begin(), i.end());
    }
    std::set<std::vector<int>> distinct(next.begin(), next.end());
    std::map<std::vector<int>, int> rank;
    int r = 0;
    for (const auto& d : distinct) rank[d] = r++;
    for (std::size_t v = 0; v < n; ++v) colour[v] = {rank[next[v]]};
  }

  std::vector<std::size_t> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return std::tie(colour[x], x) < std::tie(colour[y], y); });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    blocks.push_back({i, j});
    i = j;
  }

  std::vector<int> best;
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::vector<int> code;
      code.reserve(n * n + n);
      for (std::size_t v : order) code.push_back(colour[v][0]);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) code.push_back(c[order[x]][order[y]]);
      if (best.empty() || code < best) best = std::move(code);
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(b + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

std::string DynkinType::name() const {
  const char* f = family == DynkinFamily::A ? "A" : family == DynkinFamily::D ? "D" : "E";
  return f + std::to_string(rank);
}

int DynkinType::coxeter_number() const {
  const int n = static_cast<int>(rank);
  switch (family) {
    case DynkinFamily::A: return n + 1;
    case DynkinFamily::D: return 2 * n - 2;
    case DynkinFamily::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
  }
  return 0;
}

std::optional<DynkinType> classify_dynkin(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n == 0 || !q.is_connected() || q.arrows().size() != n - 1) return std::nullopt;
  std::vector<std::set<std::size_t>> adj(n);
  for (const auto& a : q.arrows()) {
    adj[a.source].insert(a.target);
    adj[a.target].insert(a.source);
  }
  std::size_t edges = 0;
  for (const auto& s : adj) edges += s.size();
  if (edges != 2 * (n - 1)) return std::nullopt;  // multiple edges
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() > 3) return std::nullopt;
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return DynkinType{DynkinFamily::A, n};
  if (branch.size() > 1) return std::nullopt;
  std::vector<std::size_t> arms;
  for (std::size_t start : adj[branch[0]]) {
    std::size_t prev = branch[0], cur = start, len = 1;
    while (adj[cur].size() == 2) {
      std::size_t nxt = *adj[cur].begin() == prev ? *adj[cur].rbegin() : *adj[cur].begin();
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return DynkinType{DynkinFamily::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DynkinType{DynkinFamily::E, n};
  return std::nullopt;
}

std::optional<DynkinType> parse_dynkin_type(const std::string& name) {
  if (name.size() < 2) return std::nullopt;
  DynkinFamily f;
  switch (name[0]) {
    case 'A': case 'a': f = DynkinFamily::A; break;
    case 'D': case 'd': f = DynkinFamily::D; break;
    case 'E': case 'e': f = DynkinFamily::E; break;
    default: return std::nullopt;
  }
  std::size_t n = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    n = n * 10 + static_cast<std::size_t>(name[i] - '0');
    if (n > 1000) return std::nullopt;
  }
  if (n == 0) return std::nullopt;
  if (f == DynkinFamily::D && n < 4) return std::nullopt;
  if (f == DynkinFamily::E && (n < 6 || n > 8)) return std::nullopt;
  return DynkinType{f, n};
}

Quiver dynkin_quiver(const DynkinType& type, const std::string& orientation) {
  const std::size_t n = type.rank;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t path_end = type.family == DynkinFamily::A ? n : n - 1;
  for (std::size_t i = 1; i < path_end; ++i) edges.push_back({i, i + 1});
  if (type.family == DynkinFamily::D) edges.push_back({n - 2, n});
  if (type.family == DynkinFamily::E) edges.push_back({3, n});

  std::vector<int> parity(n + 1, -1);
  parity[1] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [x, y] : edges) {
      if (parity[x] >= 0 && parity[y] < 0) parity[y] = 1 - parity[x], changed = true;
      if (parity[y] >= 0 && parity[x] < 0) parity[x] = 1 - parity[y], changed = true;
    }
  }
  std::vector<std::pair<std::string, std::string>> arrows;
  for (auto [x, y] : edges) {
    bool forward;
    if (orientation == "linear")
      forward = true;
    else if (orientation == "alternating")
      forward = parity[x] == 0;
    else
      throw InputError("unknown orientation '" + orientation + "'");
    if (forward)
      arrows.push_back({labels[x - 1], labels[y - 1]});
    else
      arrows.push_back({labels[y - 1], labels[x - 1]});
  }
  return Quiver::from_pairs(labels, arrows);
}

MutationWalk find_acyclic_in_mutation_class(const Quiver& q, std::size_t max_states) {
  if (q.has_two_cycles()) throw InputError("quiver has 2-cycles");
  if (!q.is_connected()) throw NotDynkinError("quiver is not connected");
  auto finish = [](const Quiver& acyclic, std::vector<std::string> path) {
    if (!classify_dynkin(acyclic)) throw NotDynkinError("mutation class contains a non-Dynkin acyclic quiver");
    return MutationWalk{acyclic, std::move(path)};
  };
  if (q.max_multiplicity() > 1) throw NotDynkinError("quiver has a multiple arrow");
  if (q.is_acyclic()) return finish(q, {});

  std::set<std::vector<int>> seen{canonical_form(q)};
  std::deque<std::pair<Quiver, std::vector<std::string>>> queue{{q, {}}};
  while (!queue.empty()) {
    auto [cur, path] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < cur.vertex_count(); ++k) {
      Quiver next = mutate(cur, k);
      if (next.max_multiplicity() > 1) throw NotDynkinError("mutation produces a multiple arrow");
      auto path2 = path;
      path2.push_back(cur.label(k));
      if (next.is_acyclic()) return finish(next, std::move(path2));
      if (!seen.insert(canonical_form(next)).second) continue;
      if (seen.size() > max_states) throw NotDynkinError("mutation class exceeds the search cap");
      queue.emplace_back(std::move(next), std::move(path2));
    }
  }
  throw NotDynkinError("mutation class has no acyclic member");
}

}  // namespace tiltforge
