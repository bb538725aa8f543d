#pragma once

// Test-only oracles. These deliberately avoid the library's enumeration and
// reduction paths: plain subset filtering and literal quantifier evaluation,
// so the fast implementations have something independent to agree with.

#include <cstdint>
#include <vector>

#include "znspec/lattice.hpp"
#include "znspec/module.hpp"

namespace oracle {

// All subgroups of a module with at most 16 elements, by filtering every
// subset that contains 0 for closure under addition. A nonempty add-closed
// subset of a finite group is a subgroup, and the Z/nZ scalar action is
// repeated addition, so this is the full submodule list.
inline std::vector<znspec::Bitset> subgroups_by_filter(const znspec::FiniteModule& m) {
  const std::uint32_t n = m.size();
  std::vector<znspec::Bitset> out;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {  // bit 0 = zero
    std::vector<std::uint32_t> elems;
    for (std::uint32_t e = 0; e < n; ++e)
      if (mask & (1u << e)) elems.push_back(e);
    bool closed = true;
    for (auto x : elems) {
      for (auto y : elems) {
        std::uint32_t s = m.add(static_cast<znspec::FiniteModule::Elt>(x),
                                static_cast<znspec::FiniteModule::Elt>(y));
        if (!(mask & (1u << s))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (!closed) continue;
    znspec::Bitset b(n);
    for (auto e : elems) b.set(e);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), znspec::canonical_less);
  return out;
}

// Literal subset quantifier for the max-property: for every maximal L and
// every subset A of the other maximals, the intersection of A avoids L.
inline bool max_property_by_subsets(const znspec::Lattice& lat) {
  std::vector<std::uint32_t> maxes = lat.maximals().to_list();
  for (auto l : maxes) {
    std::vector<std::uint32_t> others;
    for (auto k : maxes)
      if (k != l) others.push_back(k);
    for (std::uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
      std::uint32_t acc = lat.top_id();
      for (std::size_t i = 0; i < others.size(); ++i)
        if (mask & (1u << i)) acc = lat.meet(acc, others[i]);
      if (lat.leq(acc, l)) return false;
    }
  }
  return true;
}

// Literal finite-subset form of the min-property.
inline bool min_property_by_subsets(const znspec::Lattice& lat) {
  std::vector<std::uint32_t> simples = lat.simples().to_list();
  for (auto l : simples) {
    std::vector<std::uint32_t> others;
    for (auto k : simples)
      if (k != l) others.push_back(k);
    for (std::uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
      std::uint32_t acc = lat.zero_id();
      for (std::size_t i = 0; i < others.size(); ++i)
        if (mask & (1u << i)) acc = lat.join(acc, others[i]);
      if (lat.leq(l, acc)) return false;
    }
  }
  return true;
}

// Strongly hollow by the raw definition, evaluated on element sets.
inline bool strongly_hollow_by_definition(const znspec::Lattice& lat, std::uint32_t l) {
  if (l == lat.zero_id()) return false;
  const znspec::FiniteModule& m = lat.module();
  for (std::uint32_t a = 0; a < lat.size(); ++a)
    for (std::uint32_t b = 0; b <= a; ++b) {
      znspec::Bitset sum = znspec::subgroup_sum(m, lat.at(a).elems, lat.at(b).elems);
      bool in_sum = lat.at(l).elems.is_subset_of(sum);
      bool in_either = lat.at(l).elems.is_subset_of(lat.at(a).elems) ||
                       lat.at(l).elems.is_subset_of(lat.at(b).elems);
      if (in_sum && !in_either) return false;
    }
  return true;
}

}  // namespace oracle
