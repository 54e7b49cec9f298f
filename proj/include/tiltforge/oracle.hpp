#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tiltforge/cluster.hpp"
#include "tiltforge/quiver.hpp"
#include "tiltforge/slices.hpp"

namespace tiltforge {

inline constexpr std::size_t kOracleMaxRank = 5;

// First violated local-slice axiom of s in the AR quiver of C, if any.
std::optional<std::string> slice_axiom_violation(const ClusterModel& m, const std::vector<CVertex>& s);
bool is_local_slice(const ClusterModel& m, const std::vector<CVertex>& s);

// n-subsets of the vertices outside tau T that satisfy the axioms.
std::vector<LocalSlice> brute_force_slices(const ClusterModel& m, const CTObject& t);
// I(x, y) through graded composition of basis morphisms.
std::vector<CVertex> oracle_i_set(const ClusterModel& m, const CVertex& x, const CVertex& y);
AdmissibleSet oracle_annihilator(const ClusterModel& m, const CTObject& t, const Quiver& q_b, const LocalSlice& s);
std::vector<AdmissibleSet> brute_force_maximal_tilted(const ClusterModel& m, const CTObject& t, const Quiver& q_b);
// Components of the graph joining slices that differ by replacing one X with tau X.
std::vector<std::vector<LocalSlice>> homotopy_classes_bruteforce(const ClusterModel& m, const CTObject& t);
// Additive function started at x, truncated at zero.
std::size_t hammock_dim(const ZModel& m, const DVertex& x, const DVertex& y);

struct OracleReport {
  std::string type;
  Quiver quiver;
  std::size_t slice_count = 0;
  std::size_t class_count = 0;
  std::vector<AdmissibleSet> maximal_tilted;  // sorted
  bool enumeration_matches = false;           // section enumeration = brute force
  bool classes_match_annihilators = false;    // same class <=> same annihilator
  bool arrow_on_cycle_matches = false;
  bool rightward_matches = false;
  bool leftward_matches = false;
  bool rightmost_unique = false;

  bool ok() const;
};

OracleReport run_oracle(const ClusterModel& m, const CTObject& t, const Quiver& q_b);

}  // namespace tiltforge
