#include "tiltforge/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include "tiltforge/errors.hpp"
#include "tiltforge/io.hpp"

namespace tiltforge {

namespace {

struct Inputs {
  std::string quiver_file;
  std::string dynkin;
  std::string orientation = "linear";
  std::string distribution_file;
  std::string format = "json";
  std::string out_dir = ".";
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::size_t max_states() {
  const char* env = std::getenv("TILTFORGE_MAX_BFS");
  if (!env || !*env) return 100000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw InputError("TILTFORGE_MAX_BFS must be a positive integer");
  return static_cast<std::size_t>(v);
}

Quiver load_quiver(const Inputs& in) {
  if (!in.quiver_file.empty() && !in.dynkin.empty()) throw InputError("give either --quiver or --dynkin");
  if (!in.quiver_file.empty()) return quiver_from_json(read_json(in.quiver_file));
  if (!in.dynkin.empty()) {
    auto type = parse_dynkin_type(in.dynkin);
    if (!type) throw InputError("unknown Dynkin type '" + in.dynkin + "'");
    return dynkin_quiver(*type, in.orientation);
  }
  throw InputError("an input quiver is required (--quiver or --dynkin)");
}

SliceContext load_context(const Inputs& in) {
  if (!in.distribution_file.empty()) {
    auto d = distribution_from_json(read_json(in.distribution_file));
    return SliceContext(std::move(d.model), std::move(d.object));
  }
  Quiver q = load_quiver(in);
  auto real = realize_quiver(q, max_states());
  return SliceContext(std::move(real.model), std::move(real.object), q);
}

void add_input_options(CLI::App* cmd, Inputs& in, bool distribution) {
  cmd->add_option("--quiver", in.quiver_file, "quiver JSON file");
  cmd->add_option("--dynkin", in.dynkin, "Dynkin type such as A3, D5, E6");
  cmd->add_option("--orientation", in.orientation, "linear or alternating (with --dynkin)");
  if (distribution) cmd->add_option("--distribution", in.distribution_file, "distribution JSON file");
}

void add_format_options(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--format", in.format, "json, dot or both")->check(CLI::IsMember({"json", "dot", "both"}));
  cmd->add_option("--out-dir", in.out_dir, "directory for DOT files");
}

void write_file(const std::string& dir, const std::string& name, const std::string& text, std::ostream& out) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path.string() + "'");
  f << text;
  out << path.string() << "\n";
}

Json ar_json(const ClusterModel& m, const CTObject* t) {
  Json j;
  j["type"] = m.derived().type().name();
  j["vertices"] = Json::array();
  for (const auto& v : m.vertices()) {
    Json e = vertex_to_json(m, v);
    e["tau"] = vertex_to_json(m, m.tau(v));
    j["vertices"].push_back(e);
  }
  j["arrows"] = Json::array();
  for (const auto& v : m.vertices())
    for (const auto& w : m.successors(v)) j["arrows"].push_back({vertex_to_json(m, v), vertex_to_json(m, w)});
  if (t) j["summands"] = distribution_to_json(m, *t)["summands"];
  return j;
}

// homotopy class index for every legal slice
std::vector<std::size_t> class_indices(const SliceContext& ctx) {
  std::vector<std::size_t> cls(ctx.slices().size(), ctx.slices().size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < ctx.slices().size(); ++i) {
    if (cls[i] != ctx.slices().size()) continue;
    for (const auto& s : homotopy_class(ctx, ctx.slices()[i])) {
      auto it = std::lower_bound(ctx.slices().begin(), ctx.slices().end(), s);
      cls[static_cast<std::size_t>(it - ctx.slices().begin())] = next;
    }
    ++next;
  }
  return cls;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tiltforge: maximal tilted subalgebras of cluster-tilted algebras of Dynkin type"};
  app.require_subcommand(1);
  Inputs in;
  std::vector<std::string> at;
  std::string set_text, slice_file, sweep;

  auto* build_ar = app.add_subcommand("build-ar", "AR quiver of the cluster category");
  add_input_options(build_ar, in, true);
  add_format_options(build_ar, in);
  auto* mutate_cmd = app.add_subcommand("mutate", "mutate a quiver at a sequence of vertices");
  add_input_options(mutate_cmd, in, false);
  mutate_cmd->add_option("--at", at, "vertex labels, applied in order")->required();
  auto* realize = app.add_subcommand("realize", "cluster-tilting object realizing a quiver");
  add_input_options(realize, in, false);
  auto* slices_cmd = app.add_subcommand("slices", "legal local slices with annihilators and homotopy classes");
  add_input_options(slices_cmd, in, true);
  auto* check = app.add_subcommand("check", "decide whether an arrow set is tilted admissible");
  add_input_options(check, in, true);
  check->add_option("--set", set_text, "arrows such as \"1->2,3->4\"")->required();
  auto* maximal = app.add_subcommand("maximal-tilted", "all maximal tilted subalgebras");
  add_input_options(maximal, in, true);
  add_format_options(maximal, in);
  auto* oracle = app.add_subcommand("oracle", "brute-force cross-check");
  add_input_options(oracle, in, true);
  oracle->add_option("--sweep", sweep, "check every cluster-tilting object of this Dynkin type");
  auto* validate = app.add_subcommand("validate-slice", "check the local slice axioms");
  add_input_options(validate, in, true);
  validate->add_option("--slice", slice_file, "slice JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (build_ar->parsed()) {
      std::optional<ClusterModel> m;
      std::optional<CTObject> t;
      if (!in.distribution_file.empty()) {
        auto d = distribution_from_json(read_json(in.distribution_file));
        m = d.model;
        t = d.object;
      } else {
        Quiver q = load_quiver(in);
        if (q.is_acyclic() && classify_dynkin(q)) {
          m = ClusterModel::build(q);
        } else {
          auto real = realize_quiver(q, max_states());
          m = real.model;
          t = real.object;
        }
      }
      const CTObject* tp = t ? &*t : nullptr;
      if (in.format != "dot") out << dump(ar_json(*m, tp));
      if (in.format == "dot") out << ar_quiver_dot(*m, tp, {}, "ar");
      if (in.format == "both") write_file(in.out_dir, "ar.dot", ar_quiver_dot(*m, tp, {}, "ar"), out);
    } else if (mutate_cmd->parsed()) {
      Quiver q = load_quiver(in);
      for (const auto& k : at) q = mutate(q, k);
      out << dump(quiver_to_json(q));
    } else if (realize->parsed()) {
      auto real = realize_quiver(load_quiver(in), max_states());
      Json j = distribution_to_json(real.model, real.object);
      j["mutation_path"] = real.mutation_path;
      out << dump(j);
    } else if (slices_cmd->parsed()) {
      SliceContext ctx = load_context(in);
      auto cls = class_indices(ctx);
      Json j;
      j["quiver"] = quiver_to_json(ctx.quiver());
      j["slices"] = Json::array();
      for (std::size_t i = 0; i < ctx.slices().size(); ++i)
        j["slices"].push_back({{"members", slice_to_json(ctx.model(), ctx.slices()[i])},
                               {"relations", arrow_set_to_json(ctx.quiver(), annihilator_set(ctx, ctx.slices()[i]))},
                               {"class", cls[i]}});
      j["class_count"] = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
      out << dump(j);
    } else if (check->parsed()) {
      SliceContext ctx = load_context(in);
      AdmissibleSet s = parse_arrow_set(ctx.quiver(), set_text);
      if (!is_admissible(ctx.quiver(), s)) {
        err << "note: the set is not admissible\n";
        out << "not-tilted\n";
      } else {
        out << (is_tilted_admissible(ctx, s) ? "tilted\n" : "not-tilted\n");
      }
    } else if (maximal->parsed()) {
      SliceContext ctx = load_context(in);
      AlgorithmResult r = maximal_tilted_subalgebras(ctx);
      if (in.format != "dot") out << dump(result_to_json(r));
      if (in.format != "json") {
        for (std::size_t i = 0; i < r.presentations.size(); ++i) {
          const auto name = "presentation_" + std::to_string(i);
          write_file(in.out_dir, name + ".dot", presentation_dot(r.quiver, r.presentations[i].relations, name), out);
          const auto cls = "class_" + std::to_string(i);
          const auto rightmost = rightmost_representative(ctx, r.presentations[i].slice);
          write_file(in.out_dir, cls + ".dot", ar_quiver_dot(ctx.model(), &ctx.object(), rightmost.members, cls), out);
        }
      }
    } else if (oracle->parsed()) {
      if (!sweep.empty()) {
        auto type = parse_dynkin_type(sweep);
        if (!type) throw InputError("unknown Dynkin type '" + sweep + "'");
        ClusterModel m = ClusterModel::build(dynkin_quiver(*type, in.orientation));
        Json j = Json::array();
        for (const auto& ct : all_cluster_tilting(m)) {
          CTObject t{{}, ct};
          for (std::size_t i = 0; i < ct.size(); ++i) t.labels.push_back(std::to_string(i + 1));
          j.push_back(report_to_json(run_oracle(m, t, gabriel_quiver(m, t))));
        }
        out << dump(j);
      } else {
        SliceContext ctx = load_context(in);
        out << dump(report_to_json(run_oracle(ctx.model(), ctx.object(), ctx.quiver())));
      }
    } else if (validate->parsed()) {
      std::optional<SliceContext> ctx;
      std::optional<ClusterModel> m;
      if (!in.distribution_file.empty()) {
        ctx.emplace(load_context(in));
        m = ctx->model();
      } else {
        Quiver q = load_quiver(in);
        if (q.is_acyclic() && classify_dynkin(q)) {
          m = ClusterModel::build(q);
        } else {
          ctx.emplace(load_context(in));
          m = ctx->model();
        }
      }
      LocalSlice s = slice_from_json(*m, read_json(slice_file));
      if (auto why = slice_axiom_violation(*m, s.members)) {
        out << "invalid: " << *why << "\n";
        return 4;
      }
      if (ctx)
        for (const auto& v : s.members)
          if (ctx->forbidden(v)) {
            out << "invalid: member " << m->describe(v) << " lies in tau T\n";
            return 4;
          }
      out << "valid\n";
    }
  } catch (const NotDynkinError& e) {
    err << "error: not of Dynkin type: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace tiltforge
