#pragma once

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "tiltforge/cli.hpp"
#include "tiltforge/errors.hpp"
#include "tiltforge/io.hpp"
#include "tiltforge/oracle.hpp"
#include "tiltforge/tilt.hpp"

namespace tf_test {

using namespace tiltforge;

inline std::string fixture_path(const std::string& name) { return std::string(TILTFORGE_FIXTURE_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Quiver fixture_quiver(const std::string& name) {
  return quiver_from_json(Json::parse(read_text(fixture_path(name))));
}

inline Quiver fix_d5() { return fixture_quiver("fix_d5.json"); }
inline Quiver fix_a3c() { return fixture_quiver("fix_a3c.json"); }
inline Quiver fix_a3l() { return fixture_quiver("fix_a3l.json"); }
inline Quiver fix_a5() { return fixture_quiver("fix_a5.json"); }

inline DynkinType type(const std::string& name) { return *parse_dynkin_type(name); }

inline SliceContext context_for(const Quiver& q) {
  auto r = realize_quiver(q);
  return SliceContext(std::move(r.model), std::move(r.object), q);
}

// D5 distribution on the seed a,b,d -> c and d -> e; vertices addressed by (column, row).
// Column is the position; rows are a, then b or c, then d, then e.
struct D5Grid {
  ClusterModel model;
  CTObject object;
  Quiver quiver;

  D5Grid()
      : model(ClusterModel::build(
            Quiver::from_pairs({"a", "b", "c", "d", "e"}, {{"a", "c"}, {"b", "c"}, {"d", "c"}, {"d", "e"}}))),
        quiver(fix_d5()) {
    object = CTObject{{"1", "2", "3", "4", "5"}, {at(8, 3), at(5, 0), at(5, 1), at(3, 2), at(2, 3)}};
  }

  CVertex at(int col, int row) const {
    std::size_t orbit = row == 0 ? 0 : row == 1 ? (col % 2 ? 1 : 2) : row == 2 ? 3 : 4;
    return model.canonicalize({orbit, (col - model.derived().height(orbit)) / 2});
  }

  CVertex summand(const std::string& label) const { return object.summands[object.index(label)]; }

  SliceContext context() const { return SliceContext(model, object, quiver); }
};

inline AdmissibleSet arrows(const Quiver& q, const std::string& text) { return parse_arrow_set(q, text); }

inline std::size_t arrow(const Quiver& q, const std::string& text) { return parse_arrow_set(q, text).arrows.at(0); }

inline std::vector<std::string> sorted_strings(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<CVertex> sorted(std::vector<CVertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

inline CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

inline CTObject numbered(const std::vector<CVertex>& summands) {
  CTObject t{{}, summands};
  for (std::size_t i = 0; i < summands.size(); ++i) t.labels.push_back(std::to_string(i + 1));
  return t;
}

}  // namespace tf_test
