#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tiltforge/derived.hpp"
#include "tiltforge/quiver.hpp"

namespace tiltforge {

// Vertex of the AR quiver of the cluster category, stored through its
// representative inside the fundamental domain (mod kQ together with P_i[1]).
struct CVertex {
  DVertex rep;

  auto operator<=>(const CVertex&) const = default;
};

// Hom_C(x, y) = Hom_D(x, y) + Hom_D(x, F y) for domain representatives.
struct HomC {
  CVertex source;
  CVertex target;
  std::vector<MorphismSpace> components;  // components[l] : x -> F^l y

  std::size_t dimension() const;
};

struct CMorphism {
  CVertex source;
  CVertex target;
  std::vector<Vector> components;  // coordinates in HomC::components[l]
};

class ClusterModel {
 public:
  static ClusterModel build(const Quiver& seed);  // throws NotDynkinError

  const ZModel& derived() const { return z_; }
  const Quiver& seed() const { return z_.seed(); }
  std::size_t rank() const { return z_.rank(); }

  // Sorted by (position, orbit).
  const std::vector<CVertex>& vertices() const { return vertices_; }
  std::size_t index(const CVertex& v) const;
  bool in_domain(const DVertex& v) const;
  CVertex canonicalize(const DVertex& v) const;
  // F^power applied to the domain representative
  DVertex lift(const CVertex& v, int power) const;

  CVertex tau(const CVertex& v) const;
  CVertex tau_inv(const CVertex& v) const;
  CVertex shift(const CVertex& v) const;
  const std::vector<CVertex>& successors(const CVertex& v) const;
  const std::vector<CVertex>& predecessors(const CVertex& v) const;
  bool has_arrow(const CVertex& from, const CVertex& to) const;

  std::size_t hom_dim(const CVertex& x, const CVertex& y) const;
  std::size_t ext1(const CVertex& x, const CVertex& y) const;

  // "label:offset" of the representative, for diagnostics and DOT output
  std::string describe(const CVertex& v) const;

 private:
  ZModel z_;
  std::vector<CVertex> vertices_;
  std::vector<std::vector<CVertex>> succ_, pred_;
  std::vector<std::size_t> hom_;  // row-major over vertices_
  std::map<DVertex, std::size_t> index_;
};

HomC hom_c(const ClusterModel& m, const CVertex& x, const CVertex& y);
// Graded composition g . f, using the action of F on paths of ZQ.
CMorphism compose_c(const ClusterModel& m, const CMorphism& f, const CMorphism& g);
std::vector<CMorphism> hom_c_basis(const ClusterModel& m, const CVertex& x, const CVertex& y);
std::size_t ext1_c(const ClusterModel& m, const CVertex& x, const CVertex& y);
bool is_cluster_tilting(const ClusterModel& m, const std::vector<CVertex>& summands);

// Basic cluster-tilting object with labelled summands.
struct CTObject {
  std::vector<std::string> labels;
  std::vector<CVertex> summands;

  std::size_t size() const { return summands.size(); }
  std::size_t index(const std::string& label) const;  // throws InputError
  bool operator==(const CTObject&) const = default;
};

CTObject projective_object(const ClusterModel& m);
CTObject ct_mutate(const ClusterModel& m, const CTObject& t, const std::string& label);
// Quiver of End_C(T); a morphism T_a -> T_b gives an arrow b -> a.
Quiver gabriel_quiver(const ClusterModel& m, const CTObject& t);
// All basic cluster-tilting objects, each listed in canonical vertex order.
std::vector<std::vector<CVertex>> all_cluster_tilting(const ClusterModel& m);

struct Realization {
  ClusterModel model;
  CTObject object;
  std::vector<std::string> mutation_path;  // mutations from q_b to the seed quiver
};

// Finds (C, T) with gabriel_quiver(T) equal to q_b, labels included.
Realization realize_quiver(const Quiver& q_b, std::size_t max_states = 100000);

struct CellDecomposition {
  std::vector<std::vector<std::size_t>> cells;  // summand indices
  std::vector<std::size_t> cell_of;             // summand index -> cell index
};

CellDecomposition cell_decomposition(const ClusterModel& m, const CTObject& t);

}  // namespace tiltforge
