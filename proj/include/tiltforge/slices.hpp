#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "tiltforge/cluster.hpp"
#include "tiltforge/quiver.hpp"

namespace tiltforge {

// Sorted set of n vertices of the AR quiver of C.
struct LocalSlice {
  std::vector<CVertex> members;

  bool contains(const CVertex& v) const;
  auto operator<=>(const LocalSlice&) const = default;
};

LocalSlice make_slice(std::vector<CVertex> members);

// plus: towards tau (left); minus: towards tau^-1 (right)
enum class Direction { plus, minus };

// Precomputed data for one cluster-tilting object T: the forbidden set tau T,
// I-sets between summands, cells and the legal local slices.
class SliceContext {
 public:
  SliceContext(ClusterModel m, CTObject t);
  // q_b must be the Gabriel quiver of T (arrow ids may differ); its ids are used.
  SliceContext(ClusterModel m, CTObject t, Quiver q_b);

  const ClusterModel& model() const { return m_; }
  const CTObject& object() const { return t_; }
  const Quiver& quiver() const { return q_; }
  const CellDecomposition& cells() const { return cells_; }

  bool forbidden(const CVertex& v) const;  // v in tau T
  const std::vector<CVertex>& tau_t() const { return tau_t_; }
  // tau I(T_s, T_t) for summand indices s, t
  const std::vector<CVertex>& tau_i(std::size_t s, std::size_t t) const { return tau_i_[s][t]; }
  // tau I(T_a, T_b) for an arrow b -> a
  const std::vector<CVertex>& arrow_tau_i(std::size_t arrow) const;

  // All legal local slices, sorted.
  const std::vector<LocalSlice>& slices() const { return slices_; }
  // A lift of slices()[i] to ZQ: lifts()[i][orbit] is the member in that orbit.
  const std::vector<std::vector<DVertex>>& lifts() const { return lifts_; }
  bool is_legal_slice(const LocalSlice& s) const;

 private:
  void init();

  ClusterModel m_;
  CTObject t_;
  Quiver q_;
  CellDecomposition cells_;
  std::vector<CVertex> tau_t_;
  std::vector<std::vector<std::vector<CVertex>>> tau_i_;
  std::vector<LocalSlice> slices_;
  std::vector<std::vector<DVertex>> lifts_;
};

std::vector<LocalSlice> enumerate_local_slices(const SliceContext& ctx);
// Z with a nonzero composite X -> Z -> Y.
std::vector<CVertex> i_set(const ClusterModel& m, const CVertex& x, const CVertex& y);
bool arrow_on_cycle(const SliceContext& ctx, std::size_t arrow);
AdmissibleSet annihilator_set(const SliceContext& ctx, const LocalSlice& s);

std::vector<CVertex> span_arrow(const SliceContext& ctx, std::size_t arrow);
std::vector<CVertex> span_set(const SliceContext& ctx, const AdmissibleSet& s);
// Legal slices whose annihilator is exactly s.
std::vector<LocalSlice> supporting_slices(const SliceContext& ctx, const AdmissibleSet& s);
// Legal slices contained in span(s).
std::vector<LocalSlice> slices_in_span(const SliceContext& ctx, const AdmissibleSet& s);
bool is_tilted_admissible(const SliceContext& ctx, const AdmissibleSet& s);

bool can_move(const SliceContext& ctx, const LocalSlice& s, const CVertex& x, Direction d);
LocalSlice move_slice(const SliceContext& ctx, const LocalSlice& s, const CVertex& x, Direction d);
std::vector<LocalSlice> homotopy_class(const SliceContext& ctx, const LocalSlice& s);
bool homotopic(const SliceContext& ctx, const LocalSlice& a, const LocalSlice& b);
LocalSlice rightmost_representative(const SliceContext& ctx, const LocalSlice& s);
LocalSlice leftmost_representative(const SliceContext& ctx, const LocalSlice& s);

// Cell indices (into ctx.cells()).
std::vector<std::size_t> relative_sources(const SliceContext& ctx, const LocalSlice& s);
std::vector<std::size_t> relative_sinks(const SliceContext& ctx, const LocalSlice& s);

struct JumpSets {
  std::vector<CVertex> left;   // L_X
  std::vector<CVertex> right;  // R_X
};

JumpSets jump_sets(const ClusterModel& m, const std::vector<CVertex>& trench);
LocalSlice jump(const SliceContext& ctx, const LocalSlice& s, const std::vector<CVertex>& trench, Direction d);
// Leftmost legal slice containing `partial`; throws InputError if there is none.
LocalSlice complete_to_slice(const SliceContext& ctx, const std::vector<CVertex>& partial);
// Same, restricted to the given legal slices (for instance one homotopy class).
LocalSlice complete_to_slice(const SliceContext& ctx, const std::vector<CVertex>& partial,
                             const std::vector<LocalSlice>& candidates);

}  // namespace tiltforge
