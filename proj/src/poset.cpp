#include "dynlog/poset.hpp"

#include <algorithm>
#include <set>

namespace dynlog {

int Poset::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name)
      return i;
  return -1;
}

int Poset::require(std::string_view name) const {
  int i = index_of(name);
  if (i < 0)
    fail(errc::unknown_element, "unknown element '" + std::string(name) + "'");
  return i;
}

Poset build_poset(const std::vector<std::string> &elements,
                  const std::vector<std::pair<std::string, std::string>> &cover_pairs) {
  const int n = static_cast<int>(elements.size());
  {
    std::set<std::string> seen(elements.begin(), elements.end());
    if (static_cast<int>(seen.size()) != n)
      fail(errc::validation_error, "duplicate element names");
  }
  if (n == 0)
    fail(errc::validation_error, "empty element list");

  Poset p;
  p.names = elements;
  p.leq_matrix.assign(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int a, int b) -> std::uint8_t & {
    return p.leq_matrix[static_cast<std::size_t>(a) * n + b];
  };
  for (int i = 0; i < n; ++i)
    at(i, i) = 1;
  for (const auto &[lo, hi] : cover_pairs)
    at(p.require(lo), p.require(hi)) = 1;

  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (at(i, k))
        for (int j = 0; j < n; ++j)
          if (at(k, j))
            at(i, j) = 1;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) && at(j, i))
        fail(errc::cycle_detected, "cycle through '" + elements[i] + "' and '" +
                                       elements[j] + "'");

  for (int b = 0; b < n; ++b) {
    bool all = true;
    for (int e = 0; e < n && all; ++e)
      all = at(b, e);
    if (all) {
      p.bottom = b;
      break;
    }
  }
  if (p.bottom < 0)
    fail(errc::no_bottom, "poset has no bottom element");
  for (int t = 0; t < n; ++t) {
    bool all = true;
    for (int e = 0; e < n && all; ++e)
      all = at(e, t);
    if (all) {
      p.top = t;
      break;
    }
  }
  if (p.top < 0)
    fail(errc::no_top, "poset has no top element");
  return p;
}

int TruthLattice::meet_subset(std::span<const int> xs) const {
  const int n = size();
  int acc = top();
  for (int x : xs) {
    if (x < 0 || x >= n)
      fail(errc::unknown_element, "element index out of range");
    acc = meet(acc, x);
  }
  return acc;
}

int TruthLattice::join_subset(std::span<const int> xs) const {
  const int n = size();
  int acc = bottom();
  for (int x : xs) {
    if (x < 0 || x >= n)
      fail(errc::unknown_element, "element index out of range");
    acc = join(acc, x);
  }
  return acc;
}

TruthLattice as_complete_lattice(const Poset &p) {
  const int n = p.size();
  if (n == 1)
    fail(errc::trivial_lattice, "one-element poset is not a non-trivial lattice");

  TruthLattice L;
  L.poset = p;
  L.meet_table.assign(static_cast<std::size_t>(n) * n, -1);
  L.join_table.assign(static_cast<std::size_t>(n) * n, -1);

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // Least upper bound: an upper bound below every upper bound.
      int lub = -1;
      for (int u = 0; u < n; ++u) {
        if (!p.leq(a, u) || !p.leq(b, u))
          continue;
        bool least = true;
        for (int v = 0; v < n && least; ++v)
          if (p.leq(a, v) && p.leq(b, v) && !p.leq(u, v))
            least = false;
        if (least) {
          lub = u;
          break;
        }
      }
      if (lub < 0)
        fail(errc::not_a_lattice, "pair {" + p.names[a] + ", " + p.names[b] +
                                      "} has no least upper bound");
      int glb = -1;
      for (int u = 0; u < n; ++u) {
        if (!p.leq(u, a) || !p.leq(u, b))
          continue;
        bool greatest = true;
        for (int v = 0; v < n && greatest; ++v)
          if (p.leq(v, a) && p.leq(v, b) && !p.leq(v, u))
            greatest = false;
        if (greatest) {
          glb = u;
          break;
        }
      }
      if (glb < 0)
        fail(errc::not_a_lattice, "pair {" + p.names[a] + ", " + p.names[b] +
                                      "} has no greatest lower bound");
      L.join_table[static_cast<std::size_t>(a) * n + b] = lub;
      L.meet_table[static_cast<std::size_t>(a) * n + b] = glb;
    }
  }
  return L;
}

TruthLattice bool2() {
  return as_complete_lattice(build_poset({"0", "1"}, {{"0", "1"}}));
}

BoundedMorphismFamily
make_morphism_family(Poset source, TruthLattice target,
                     std::vector<std::string> index_names,
                     std::vector<std::vector<int>> maps) {
  if (index_names.size() != maps.size())
    fail(errc::validation_error, "index set and map family sizes differ");
  const int n = source.size();
  for (std::size_t s = 0; s < maps.size(); ++s) {
    const auto &h = maps[s];
    if (static_cast<int>(h.size()) != n)
      fail(errc::validation_error, "map '" + index_names[s] + "' is not total");
    for (int v : h)
      if (v < 0 || v >= target.size())
        fail(errc::validation_error, "map '" + index_names[s] +
                                         "' has a value outside the target");
    if (h[source.bottom] != target.bottom() || h[source.top] != target.top())
      fail(errc::validation_error,
           "map '" + index_names[s] + "' does not preserve the bounds");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (source.leq(a, b) && !target.leq(h[a], h[b]))
          fail(errc::validation_error,
               "map '" + index_names[s] + "' is not order-preserving");
  }
  BoundedMorphismFamily f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.index_names = std::move(index_names);
  f.maps = std::move(maps);
  return f;
}

bool check_full_set(const BoundedMorphismFamily &family) {
  const int n = family.source.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (family.source.leq(a, b))
        continue;
      bool separated = false;
      for (const auto &h : family.maps)
        if (!family.target.leq(h[a], h[b])) {
          separated = true;
          break;
        }
      if (!separated)
        return false;
    }
  return true;
}

} // namespace dynlog
