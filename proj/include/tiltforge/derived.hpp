#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "tiltforge/linalg.hpp"
#include "tiltforge/quiver.hpp"

namespace tiltforge {

// Vertex (i, n) of ZQ; orbit indexes the seed quiver's vertices.
struct DVertex {
  std::size_t orbit = 0;
  int offset = 0;

  auto operator<=>(const DVertex&) const = default;
};

using Path = std::vector<DVertex>;  // consecutive vertices joined by arrows of ZQ

enum class Auto { tau, tau_inv, nu, shift, F, F_inv };

// Hom(x, -) restricted to the hammock starting at x, as a representation of ZQ.
class HomFunctor {
 public:
  struct Node {
    std::vector<Path> basis;               // each basis morphism is a single path from x
    std::map<DVertex, Matrix> incoming;    // predecessor w -> map Hom(x,w) -> Hom(x,node)
  };

  DVertex source() const { return source_; }
  std::size_t dim(const DVertex& y) const;
  const Node* node(const DVertex& y) const;
  // Image of f in Hom(x, p.back()) under post-composition with the path p (p.front() is f's target).
  Vector push_along(const Vector& f, const Path& p) const;

 private:
  friend class ZModel;
  DVertex source_;
  int phi_hi_ = 0;
  std::map<DVertex, Node> nodes_;
};

struct MorphismSpace {
  DVertex source;
  DVertex target;
  std::vector<Path> basis;

  std::size_t dimension() const { return basis.size(); }
};

struct Morphism {
  DVertex source;
  DVertex target;
  Vector coords;
};

// Combinatorial model of D^b(mod kQ) for a Dynkin quiver Q.
class ZModel {
 public:
  static ZModel build(const Quiver& seed);  // throws NotDynkinError

  const Quiver& seed() const { return seed_; }
  const DynkinType& type() const { return type_; }
  int coxeter_number() const { return h_; }
  std::size_t rank() const { return seed_.vertex_count(); }

  int height(std::size_t orbit) const { return height_[orbit]; }
  // Increases by one along every arrow.
  int position(const DVertex& v) const { return 2 * v.offset + height_[v.orbit]; }
  std::vector<DVertex> predecessors(const DVertex& v) const;
  std::vector<DVertex> successors(const DVertex& v) const;

  DVertex apply(Auto which, const DVertex& v) const;
  DVertex projective(std::size_t i) const { return {i, 0}; }
  DVertex injective(std::size_t i) const { return {nu_orbit_[i], nu_offset_[i]}; }
  // offset of the injective in orbit j (the last module of that orbit)
  int last_module_offset(std::size_t orbit) const { return last_module_[orbit]; }
  bool is_module(const DVertex& v) const;

  int window_lo() const { return -2 * h_; }
  int window_hi() const { return 2 * h_; }
  bool in_window(const DVertex& v) const { return v.offset >= window_lo() && v.offset <= window_hi(); }
  // Euler-characteristic dimension vector; defined inside the window.
  const std::vector<long>& dimension_vector(const DVertex& v) const;

  // Checked against the window; throws InputError outside it.
  MorphismSpace hom(const DVertex& x, const DVertex& y) const;
  MorphismSpace hom_unchecked(const DVertex& x, const DVertex& y) const;
  Morphism compose(const Morphism& f, const Morphism& g) const;
  const HomFunctor& functor_from(const DVertex& x) const;

 private:
  HomFunctor compute_functor(const DVertex& x) const;

  Quiver seed_;
  DynkinType type_;
  int h_ = 0;
  std::vector<int> height_;
  std::vector<std::size_t> nu_orbit_;     // I_i lies in orbit nu_orbit_[i]
  std::vector<int> nu_offset_;            // at offset nu_offset_[i]
  std::vector<std::size_t> nu_orbit_inv_;
  std::vector<int> last_module_;
  std::map<DVertex, std::vector<long>> dims_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

ZModel build_zmodel(const Quiver& q);
MorphismSpace hom_d(const ZModel& m, const DVertex& x, const DVertex& y);
Morphism compose_d(const ZModel& m, const Morphism& f, const Morphism& g);
DVertex apply_auto(const ZModel& m, Auto which, const DVertex& v);
Morphism identity_morphism(const DVertex& x);

}  // namespace tiltforge
