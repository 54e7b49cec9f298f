#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tiltforge/quiver.hpp"
#include "tiltforge/slices.hpp"

namespace tiltforge {

struct TiltedPresentation {
  AdmissibleSet relations;
  std::vector<std::vector<std::string>> jump_path;  // cells jumped, from the initial presentation
  LocalSlice slice;                                  // a slice with this annihilator
};

struct JumpEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::vector<std::string> cell;
};

struct AlgorithmResult {
  Quiver quiver;
  std::vector<TiltedPresentation> presentations;
  std::vector<JumpEdge> edges;
};

// Drops arrows leaving `cell` and adds the arrows entering it (vertex indices of q).
AdmissibleSet apr_transform(const Quiver& q, const AdmissibleSet& s, const std::vector<std::size_t>& cell);

std::vector<std::size_t> cell_vertices(const SliceContext& ctx, std::size_t cell);
std::vector<std::string> cell_labels(const SliceContext& ctx, std::size_t cell);
std::vector<CVertex> trench(const SliceContext& ctx, std::size_t cell);

// Relative source of a rightmost slice whose summands all lie in tau^-2 of it,
// and whose L-set lies on some slice homotopic to it.
bool jumpable(const SliceContext& ctx, const LocalSlice& rightmost, std::size_t cell);
// Mirror: relative sink of a leftmost slice that contains all its summands,
// and whose R-set lies on some slice homotopic to it.
bool jumpable_left(const SliceContext& ctx, const LocalSlice& leftmost, std::size_t cell);
// Homotopic slice containing the jump set on the near side of the trench, if any.
std::optional<LocalSlice> jump_start(const SliceContext& ctx, const LocalSlice& s, std::size_t cell, Direction d);

// Closure under rightward jumps from the first legal slice.
AlgorithmResult maximal_tilted_subalgebras(const SliceContext& ctx, std::size_t max_presentations = 0);
// Same closure using leftmost representatives and leftward jumps.
AlgorithmResult leftward_pass(const SliceContext& ctx, std::size_t max_presentations = 0);
// Realizes q_b and runs the rightward closure.
AlgorithmResult maximal_tilted_subalgebras(const Quiver& q_b, std::size_t max_states = 100000);

std::vector<AdmissibleSet> relation_sets(const AlgorithmResult& r);

}  // namespace tiltforge
