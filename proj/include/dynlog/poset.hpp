#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynlog/errors.hpp"

namespace dynlog {

/// A finite bounded poset. The order is kept as a dense reflexive-transitive
/// boolean matrix over element indices; bottom and top are mandatory.
struct Poset {
  std::vector<std::string> names;
  std::vector<std::uint8_t> leq_matrix; // row-major, size() * size()
  int bottom = -1;
  int top = -1;

  int size() const { return static_cast<int>(names.size()); }

  bool leq(int a, int b) const {
    return leq_matrix[static_cast<std::size_t>(a) * names.size() + b] != 0;
  }

  /// Index of a named element, -1 if absent.
  int index_of(std::string_view name) const;

  /// Index of a named element; throws unknown_element if absent.
  int require(std::string_view name) const;
};

/// Builds a bounded poset from element names and covering pairs (lo, hi).
/// The order is the reflexive-transitive closure of the covers.
Poset build_poset(const std::vector<std::string> &elements,
                  const std::vector<std::pair<std::string, std::string>> &cover_pairs);

/// A finite complete lattice of truth values: a bounded poset together with
/// pairwise meet/join tables. Subset meets/joins fold the tables; the empty
/// meet is top and the empty join is bottom.
struct TruthLattice {
  Poset poset;
  std::vector<int> meet_table; // row-major
  std::vector<int> join_table;

  int size() const { return poset.size(); }
  int bottom() const { return poset.bottom; }
  int top() const { return poset.top; }
  bool leq(int a, int b) const { return poset.leq(a, b); }

  int meet(int a, int b) const {
    return meet_table[static_cast<std::size_t>(a) * poset.names.size() + b];
  }
  int join(int a, int b) const {
    return join_table[static_cast<std::size_t>(a) * poset.names.size() + b];
  }

  int meet_subset(std::span<const int> xs) const;
  int join_subset(std::span<const int> xs) const;

  const std::string &name_of(int e) const { return poset.names[e]; }
};

/// Certifies a bounded poset as a complete lattice (pairwise lubs/glbs
/// suffice in the finite bounded case). Rejects the one-element poset.
TruthLattice as_complete_lattice(const Poset &p);

/// The two-element lattice 0 < 1, available under the reserved name BOOL2.
TruthLattice bool2();

/// An S-indexed family of bounded-poset morphisms h_s : source -> target.
struct BoundedMorphismFamily {
  Poset source;
  TruthLattice target;
  std::vector<std::string> index_names;        // the set S
  std::vector<std::vector<int>> maps;          // maps[s][a] -> target element
};

/// Validates morphism laws (order-preserving, bottom/top preserving) and
/// shape; throws validation_error on failure.
BoundedMorphismFamily
make_morphism_family(Poset source, TruthLattice target,
                     std::vector<std::string> index_names,
                     std::vector<std::vector<int>> maps);

/// True iff the family jointly reflects the order of the source:
/// (forall s: h_s(a) <= h_s(b)) implies a <= b.
bool check_full_set(const BoundedMorphismFamily &family);

} // namespace dynlog
