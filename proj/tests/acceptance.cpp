// Acceptance suite: one PASS/FAIL line per criterion.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>

#include "support.hpp"

using namespace tf_test;

namespace {

constexpr double kD5Seconds = 5.0;
constexpr double kCheckSeconds = 5.0;
constexpr double kSweepSeconds = 600.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;
std::map<int, std::string> lines;

void report(int n, bool ok, const std::string& what) {
  lines[n] = std::string(ok ? "PASS" : "FAIL") + " " + std::to_string(n) + " " + what;
  if (!ok) ++failures;
}

// Replays every rightward jump and compares the jumped annihilator with the APR transform.
std::pair<std::size_t, bool> replay_jumps(const SliceContext& ctx, const AlgorithmResult& r) {
  std::size_t count = 0;
  bool ok = true;
  for (const auto& p : r.presentations) {
    const auto base = rightmost_representative(ctx, p.slice);
    for (std::size_t c = 0; c < ctx.cells().cells.size(); ++c) {
      if (!jumpable(ctx, base, c)) continue;
      const auto start = jump_start(ctx, base, c, Direction::minus);
      const auto jumped = jump(ctx, *start, trench(ctx, c), Direction::minus);
      ok &= annihilator_set(ctx, jumped) == apr_transform(ctx.quiver(), p.relations, cell_vertices(ctx, c));
      ++count;
    }
  }
  for (const auto& e : r.edges) {
    std::vector<std::size_t> cell;
    for (const auto& l : e.cell) cell.push_back(ctx.quiver().vertex_index(l));
    ok &= apr_transform(ctx.quiver(), r.presentations[e.from].relations, cell) == r.presentations[e.to].relations;
  }
  ok &= count == r.edges.size();
  return {count, ok};
}

std::string run_process(const std::string& command) {
  std::array<char, 4096> buf{};
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

void guarded(int n, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(n, false, what + " (exception: " + e.what() + ")");
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli_path = argc > 1 ? argv[1] : "";
  std::size_t jump_edges = 0;
  bool jumps_ok = true;

  guarded(1, "D5 end-to-end", [&] {
    Quiver q = fix_d5();
    auto t0 = Clock::now();
    auto r = maximal_tilted_subalgebras(q);
    double t = seconds_since(t0);
    std::vector<AdmissibleSet> expected{arrows(q, "4->1"), arrows(q, "2->4,3->4"), arrows(q, "1->2,1->3")};
    std::sort(expected.begin(), expected.end());
    bool cli_ok = true;
    if (!cli_path.empty()) {
      auto t1 = Clock::now();
      auto out = run_process("'" + cli_path + "' maximal-tilted --quiver '" + fixture_path("fix_d5.json") + "'");
      const Json result = Json::parse(out);
      std::vector<AdmissibleSet> got;
      for (const auto& p : result.at("maximal_tilted")) got.push_back(arrow_set_from_json(q, p.at("relations")));
      std::sort(got.begin(), got.end());
      cli_ok = got == expected && seconds_since(t1) < kD5Seconds;
    }
    report(1, relation_sets(r) == expected && cli_ok && t < kD5Seconds,
           "D5 end-to-end: three relation sets {4->1}, {2->4,3->4}, {1->2,1->3} in " + std::to_string(t) + " s" +
               (cli_path.empty() ? "" : ", CLI agrees"));
    auto [n, ok] = replay_jumps(context_for(q), r);
    jump_edges += n;
    jumps_ok &= ok;
  });

  guarded(2, "tilted admissibility", [&] {
    auto t0 = Clock::now();
    SliceContext ctx = context_for(fix_d5());
    const Quiver& q = ctx.quiver();
    auto s1 = arrows(q, "1->2,3->4"), s2 = arrows(q, "2->4,3->4");
    bool rejected = !is_tilted_admissible(ctx, s1) && slices_in_span(ctx, s1).empty();
    auto in_span = slices_in_span(ctx, s2);
    bool accepted = is_tilted_admissible(ctx, s2) && in_span.size() == 2 && supporting_slices(ctx, s2).size() == 2;
    for (const auto& s : in_span) accepted &= annihilator_set(ctx, s) == s2;
    double t = seconds_since(t0);
    report(2, rejected && accepted && t < kCheckSeconds,
           "tilted admissibility: {1->2,3->4} rejected, {2->4,3->4} accepted with " + std::to_string(in_span.size()) +
               " supporting slices in " + std::to_string(t) + " s");
  });

  guarded(3, "cells", [&] {
    D5Grid fig;
    auto cells = cell_decomposition(fig.model, fig.object);
    std::vector<std::vector<std::string>> got;
    for (const auto& c : cells.cells) {
      std::vector<std::string> labels;
      for (auto i : c) labels.push_back(fig.object.labels[i]);
      got.push_back(sorted_strings(labels));
    }
    std::sort(got.begin(), got.end());
    bool gabriel = same_arrows(gabriel_quiver(fig.model, fig.object), fix_d5());
    report(3, gabriel && got == std::vector<std::vector<std::string>>{{"1"}, {"2", "3"}, {"4", "5"}},
           "cells of the D5 distribution are {1}, {2,3}, {4,5}");
  });

  guarded(5, "negative jump", [&] {
    SliceContext ctx = context_for(fix_a5());
    const Quiver& q = ctx.quiver();
    auto sets = relation_sets(maximal_tilted_subalgebras(ctx));
    auto left = relation_sets(leftward_pass(ctx));
    bool absent = std::find(sets.begin(), sets.end(), arrows(q, "2->3,5->2")) == sets.end() &&
                  std::find(left.begin(), left.end(), arrows(q, "2->3,5->2")) == left.end();
    bool never = true;
    for (const auto& s : supporting_slices(ctx, arrows(q, "3->1,5->2"))) {
      auto r = rightmost_representative(ctx, s);
      never &= !jumpable(ctx, r, ctx.cells().cell_of[ctx.object().index("3")]);
    }
    report(5, absent && never, "A5: {2->3,5->2} never produced and cell {3} not jumpable from {3->1,5->2}");
  });

  guarded(6, "oracle sweeps", [&] {
    auto t0 = Clock::now();
    std::size_t objects = 0, bad = 0;
    for (auto name : {"A3", "A4", "D4"}) {
      ClusterModel m = ClusterModel::build(dynkin_quiver(type(name)));
      for (const auto& ct : all_cluster_tilting(m)) {
        auto t = numbered(ct);
        Quiver g = gabriel_quiver(m, t);
        auto rep = run_oracle(m, t, g);
        SliceContext ctx(m, t, g);
        auto r = maximal_tilted_subalgebras(ctx);
        bool ok = rep.ok() && relation_sets(r) == brute_force_maximal_tilted(m, t, g) &&
                  rep.class_count == rep.maximal_tilted.size();
        auto [n, jok] = replay_jumps(ctx, r);
        jump_edges += n;
        jumps_ok &= jok;
        ++objects;
        bad += !ok;
      }
    }
    double t = seconds_since(t0);
    report(6, bad == 0 && objects == 14 + 42 + 50 && t < kSweepSeconds,
           "oracle equivalence on " + std::to_string(objects) + " cluster-tilting objects of A3, A4, D4 (" +
               std::to_string(bad) + " mismatches) in " + std::to_string(t) + " s");
  });

  report(4, jumps_ok && jump_edges > 0,
         "jumped annihilator equals the APR transform on " + std::to_string(jump_edges) + " jump edges");

  guarded(7, "model sanity", [&] {
    bool counts = true;
    for (const auto& [name, count] : std::vector<std::pair<const char*, std::size_t>>{
             {"A2", 5}, {"A3", 9}, {"A4", 14}, {"D4", 16}, {"D5", 25}})
      counts &= ClusterModel::build(dynkin_quiver(type(name))).vertices().size() == count;
    bool hom = true, ext = true;
    for (auto name : {"A3", "D4"}) {
      ClusterModel m = ClusterModel::build(dynkin_quiver(type(name)));
      const auto& z = m.derived();
      for (std::size_t i = 0; i < z.rank(); ++i)
        for (int a = z.window_lo(); a <= z.window_hi(); ++a)
          for (std::size_t j = 0; j < z.rank(); ++j)
            for (int b = z.window_lo(); b <= z.window_hi(); ++b)
              hom &= hom_d(z, {i, a}, {j, b}).dimension() == hammock_dim(z, {i, a}, {j, b});
      for (const auto& x : m.vertices())
        for (const auto& y : m.vertices()) ext &= ext1_c(m, x, y) == ext1_c(m, y, x);
    }
    report(7, counts && hom && ext, "domain sizes 5/9/14/16/25, hom = hammock on A3/D4 windows, Ext1 symmetry");
  });

  guarded(8, "determinism", [&] {
    const std::string fixtures = TILTFORGE_FIXTURE_DIR;
    std::vector<std::vector<std::string>> commands{
        {"build-ar", "--dynkin", "D5", "--format", "dot"},
        {"mutate", "--quiver", fixtures + "/fix_d5.json", "--at", "4", "--at", "1"},
        {"realize", "--quiver", fixtures + "/fix_a5.json"},
        {"slices", "--quiver", fixtures + "/fix_d5.json"},
        {"check", "--quiver", fixtures + "/fix_d5.json", "--set", "2->4,3->4"},
        {"maximal-tilted", "--quiver", fixtures + "/fix_d5.json"},
        {"oracle", "--quiver", fixtures + "/fix_a5.json"},
        {"validate-slice", "--distribution", fixtures + "/d5_distribution.json", "--slice",
         fixtures + "/slice_d5_sigma1.json"}};
    bool same = true;
    for (const auto& args : commands) {
      if (!cli_path.empty()) {
        std::string cmd = "'" + cli_path + "'";
        for (const auto& a : args) cmd += " '" + a + "'";
        auto first = run_process(cmd);
        same &= !first.empty() && first == run_process(cmd);
      } else {
        auto a = cli(args), b = cli(args);
        same &= a.code == b.code && a.out == b.out && !a.out.empty();
      }
    }
    report(8, same,
           "byte-identical output across two runs of " + std::to_string(commands.size()) + " CLI commands" +
               (cli_path.empty() ? " (in process)" : ""));
  });

  for (const auto& [n, line] : lines) std::cout << line << "\n";
  return failures == 0 && lines.size() == 8 ? 0 : 1;
}
