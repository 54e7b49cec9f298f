#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tiltforge {

struct Arrow {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;

  bool operator==(const Arrow&) const = default;
};

// Finite quiver with labelled vertices and identified arrows. Loops are rejected.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  // Arrows given as label pairs; ids a0, a1, ... are assigned in order.
  static Quiver from_pairs(std::vector<std::string> vertices,
                           const std::vector<std::pair<std::string, std::string>>& arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& label(std::size_t v) const { return vertices_.at(v); }

  std::optional<std::size_t> find_vertex(const std::string& label) const;
  std::size_t vertex_index(const std::string& label) const;  // throws InputError
  std::optional<std::size_t> find_arrow(const std::string& id) const;
  // first arrow from -> to, if any
  std::optional<std::size_t> find_arrow(std::size_t from, std::size_t to) const;

  // signed count: arrows i->j minus arrows j->i
  int exchange(std::size_t i, std::size_t j) const;
  std::vector<std::vector<int>> exchange_matrix() const;
  int max_multiplicity() const;
  bool has_two_cycles() const;
  bool is_acyclic() const;
  bool is_connected() const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// Arrow-multiset equality after matching vertices by label; arrow ids ignored.
bool same_arrows(const Quiver& a, const Quiver& b);

// Fomin-Zelevinsky mutation at k. Arrows keep their ids when they survive.
Quiver mutate(const Quiver& q, std::size_t k);
Quiver mutate(const Quiver& q, const std::string& label);

struct FullCycle {
  std::vector<std::size_t> vertices;  // cyclic order, smallest vertex first
  std::vector<std::size_t> arrows;    // arrows[i] : vertices[i] -> vertices[i+1]

  bool operator==(const FullCycle&) const = default;
};

std::vector<FullCycle> full_cycles(const Quiver& q);

// Sorted arrow indices. Meaningful only together with its quiver.
struct AdmissibleSet {
  std::vector<std::size_t> arrows;

  auto operator<=>(const AdmissibleSet&) const = default;
};

bool is_admissible(const Quiver& q, const AdmissibleSet& s);
std::vector<AdmissibleSet> admissible_sets(const Quiver& q);
// Parses "1->2,3->4"; throws InputError on unknown arrows.
AdmissibleSet parse_arrow_set(const Quiver& q, const std::string& text);
std::string format_arrow_set(const Quiver& q, const AdmissibleSet& s);

// Lexicographically least vertex bijection q1 -> q2 preserving arrow counts.
std::optional<std::vector<std::size_t>> isomorphism(const Quiver& q1, const Quiver& q2);
std::vector<int> canonical_form(const Quiver& q);

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  std::size_t rank = 0;

  std::string name() const;
  int coxeter_number() const;
  bool operator==(const DynkinType&) const = default;
};

// Type of the underlying graph when it is a simply-laced Dynkin diagram.
std::optional<DynkinType> classify_dynkin(const Quiver& q);
std::optional<DynkinType> parse_dynkin_type(const std::string& name);
// Labels "1".."n"; orientation "linear" (lower label -> higher) or "alternating".
Quiver dynkin_quiver(const DynkinType& type, const std::string& orientation = "linear");

struct MutationWalk {
  Quiver acyclic;                   // acyclic member reached
  std::vector<std::string> path;    // labels mutated, from the input to `acyclic`
};

// Breadth-first search over the mutation class for an acyclic member.
// Throws NotDynkinError if a multiple arrow appears, the state cap is hit,
// or the acyclic member is not Dynkin.
MutationWalk find_acyclic_in_mutation_class(const Quiver& q, std::size_t max_states = 100000);

}  // namespace tiltforge
