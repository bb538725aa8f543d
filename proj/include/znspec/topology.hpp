#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "znspec/bitset.hpp"
#include "znspec/spectra.hpp"

namespace znspec {

enum class VarietyKind { xi_s, xi_s_c, xi_c, xi_c_m };

inline const char* kind_name(VarietyKind k) {
  switch (k) {
    case VarietyKind::xi_s: return "xi_s";
    case VarietyKind::xi_s_c: return "xi_s_c";
    case VarietyKind::xi_c: return "xi_c";
    case VarietyKind::xi_c_m: return "xi_c_m";
  }
  return "?";
}

struct TopDecision {
  bool is_topology = false;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;  // member ids
};

// Variety families are always closed under intersections here, so being a
// topology is exactly closure under pairwise unions. Returns the least
// failing pair of parameters in canonical member order.
inline TopDecision decide_topology(const std::vector<Bitset>& varieties) {
  std::unordered_set<Bitset, BitsetHash> family(varieties.begin(), varieties.end());
  for (std::uint32_t i = 0; i < varieties.size(); ++i)
    for (std::uint32_t j = i; j < varieties.size(); ++j) {
      Bitset u = varieties[i];
      u |= varieties[j];
      if (!family.count(u)) return {false, std::make_pair(i, j)};
    }
  return {true, std::nullopt};
}

// A finite topological space presented by its closed sets, over the points
// of a spectrum. Positions index into `points`.
struct FiniteSpace {
  VarietyKind kind = VarietyKind::xi_s;
  std::vector<std::uint32_t> points;  // lattice member ids, ascending
  std::vector<Bitset> closed;         // canonical order, deduplicated

  std::size_t point_count() const { return points.size(); }
  Bitset empty_set() const { return Bitset(points.size()); }
  Bitset full_set() const {
    Bitset f(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) f.set(i);
    return f;
  }
  bool is_closed(const Bitset& a) const {
    for (const auto& c : closed)
      if (c == a) return true;
    return false;
  }
};

// A variety family keyed by its parameters: for the second-side kinds each
// subset is the variety of submodules below the parameter, for the coprime
// side above it. The restricted kinds draw parameters from the annihilator
// kernels, resp. the ideal multiples.
struct VarietyFamily {
  VarietyKind kind = VarietyKind::xi_s;
  std::vector<std::pair<std::uint32_t, Bitset>> sets;  // (parameter, variety)
};

// Materializes a space from a variety family, or raises NotATopology with
// the least parameter pair whose union of varieties is not a variety.
inline FiniteSpace build_space(const Spectrum& spec, const VarietyFamily& fam);

// Deduplicates a closed-set family and checks the axioms: empty and full
// present, binary unions and intersections stay in the family. Families
// handed in here are supposed to satisfy them; a violation is a logic error.
inline FiniteSpace make_space(VarietyKind kind, const Spectrum& spec,
                              const std::vector<Bitset>& family) {
  FiniteSpace sp;
  sp.kind = kind;
  sp.points = spec.members;

  std::unordered_set<Bitset, BitsetHash> dedup(family.begin(), family.end());
  dedup.insert(sp.empty_set());
  dedup.insert(sp.full_set());
  sp.closed.assign(dedup.begin(), dedup.end());
  std::sort(sp.closed.begin(), sp.closed.end(), canonical_less);

  for (std::size_t i = 0; i < sp.closed.size(); ++i)
    for (std::size_t j = i + 1; j < sp.closed.size(); ++j) {
      Bitset u = sp.closed[i] | sp.closed[j];
      Bitset v = sp.closed[i] & sp.closed[j];
      if (!dedup.count(u) || !dedup.count(v))
        throw std::logic_error("closed-set family fails the topology axioms");
    }
  return sp;
}

inline FiniteSpace build_space(const Spectrum& spec, const VarietyFamily& fam) {
  std::unordered_set<Bitset, BitsetHash> family;
  std::vector<Bitset> sets;
  sets.reserve(fam.sets.size());
  for (const auto& [param, v] : fam.sets) {
    family.insert(v);
    sets.push_back(v);
  }
  for (std::size_t i = 0; i < fam.sets.size(); ++i)
    for (std::size_t j = i; j < fam.sets.size(); ++j) {
      Bitset u = fam.sets[i].second | fam.sets[j].second;
      if (!family.count(u))
        throw NotATopology(fam.sets[i].first, fam.sets[j].first,
                           "variety family is not closed under unions");
    }
  return make_space(fam.kind, spec, sets);
}

// Re-checks the axioms of an already-built space; used by checks that state
// "this family is a topology" as their conclusion.
inline bool verify_axioms(const FiniteSpace& sp) {
  std::unordered_set<Bitset, BitsetHash> family(sp.closed.begin(), sp.closed.end());
  if (!family.count(sp.empty_set()) || !family.count(sp.full_set())) return false;
  for (std::size_t i = 0; i < sp.closed.size(); ++i)
    for (std::size_t j = i + 1; j < sp.closed.size(); ++j) {
      if (!family.count(sp.closed[i] | sp.closed[j])) return false;
      if (!family.count(sp.closed[i] & sp.closed[j])) return false;
    }
  return true;
}

// A negative top-decision carries a witness pair; this replays it.
inline bool verify_top_witness(const std::vector<Bitset>& varieties,
                               std::pair<std::uint32_t, std::uint32_t> w) {
  std::unordered_set<Bitset, BitsetHash> family(varieties.begin(), varieties.end());
  Bitset u = varieties[w.first] | varieties[w.second];
  return !family.count(u);
}

// Smallest closed superset. Closed sets are sorted by cardinality and the
// family is intersection-closed, so the first superset is the closure.
inline Bitset closure(const FiniteSpace& sp, const Bitset& a) {
  for (const auto& c : sp.closed)
    if (a.is_subset_of(c)) return c;
  throw std::logic_error("no closed superset; family lacks the full set");
}

// A nonempty subset is irreducible iff it never splits across two closed
// sets without lying in one of them.
inline bool is_irreducible_subset(const FiniteSpace& sp, const Bitset& a) {
  if (a.none()) return false;
  for (std::size_t i = 0; i < sp.closed.size(); ++i)
    for (std::size_t j = i; j < sp.closed.size(); ++j) {
      if (a.is_subset_of(sp.closed[i]) || a.is_subset_of(sp.closed[j])) continue;
      if (a.is_subset_of(sp.closed[i] | sp.closed[j])) return false;
    }
  return true;
}

// Connectivity of the subspace topology: no split into two nonempty
// relatively-closed pieces with empty overlap.
inline bool is_connected_subset(const FiniteSpace& sp, const Bitset& a) {
  if (a.none()) return false;
  for (std::size_t i = 0; i < sp.closed.size(); ++i)
    for (std::size_t j = i + 1; j < sp.closed.size(); ++j) {
      Bitset p1 = sp.closed[i] & a;
      Bitset p2 = sp.closed[j] & a;
      if (p1.none() || p2.none()) continue;
      if ((p1 & p2).any()) continue;
      if ((p1 | p2) == a) return false;
    }
  return true;
}

inline std::vector<Bitset> irreducible_closed_sets(const FiniteSpace& sp) {
  std::vector<Bitset> out;
  for (const auto& c : sp.closed)
    if (is_irreducible_subset(sp, c)) out.push_back(c);
  return out;
}

// Maximal irreducible subsets; on a finite space these are exactly the
// maximal irreducible closed sets.
inline std::vector<Bitset> irreducible_components(const FiniteSpace& sp) {
  std::vector<Bitset> irr = irreducible_closed_sets(sp);
  std::vector<Bitset> out;
  for (const auto& c : irr) {
    bool maximal = true;
    for (const auto& d : irr)
      if (c != d && c.is_subset_of(d)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  return out;
}

// Points whose singleton closure recovers the closed set A.
inline std::vector<std::uint32_t> generic_points(const FiniteSpace& sp,
                                                 const Bitset& a) {
  std::vector<std::uint32_t> out;
  a.for_each([&](std::size_t y) {
    Bitset single(sp.point_count());
    single.set(y);
    if (closure(sp, single) == a) out.push_back(static_cast<std::uint32_t>(y));
  });
  return out;
}

inline bool is_sober(const FiniteSpace& sp) {
  for (const auto& c : irreducible_closed_sets(sp))
    if (generic_points(sp, c).size() != 1) return false;
  return true;
}

struct TopologicalProperties {
  bool connected = false, ultraconnected = false, irreducible = false;
  bool t0 = false, t1 = false, t2 = false, discrete = false;
  bool sober = false;
  // Degenerate at finite scale: reported as flags, not theorem checks.
  bool compact = true, noetherian = true, artinian = true;
};

inline TopologicalProperties topological_properties(const FiniteSpace& sp) {
  TopologicalProperties out;
  const std::size_t n = sp.point_count();
  if (n == 0) {
    out.t0 = out.t1 = out.t2 = out.discrete = out.sober = true;
    return out;
  }

  Bitset full = sp.full_set();
  out.connected = is_connected_subset(sp, full);
  out.irreducible = is_irreducible_subset(sp, full);

  out.ultraconnected = true;
  for (std::size_t i = 0; i < sp.closed.size() && out.ultraconnected; ++i)
    for (std::size_t j = i + 1; j < sp.closed.size() && out.ultraconnected; ++j) {
      if (sp.closed[i].none() || sp.closed[j].none()) continue;
      if (!sp.closed[i].intersects(sp.closed[j])) out.ultraconnected = false;
    }

  std::vector<Bitset> point_closure;
  point_closure.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    Bitset s(n);
    s.set(x);
    point_closure.push_back(closure(sp, s));
  }

  out.t0 = true;
  for (std::size_t x = 0; x < n && out.t0; ++x)
    for (std::size_t y = x + 1; y < n && out.t0; ++y)
      if (point_closure[x] == point_closure[y]) out.t0 = false;

  out.t1 = true;
  for (std::size_t x = 0; x < n && out.t1; ++x)
    if (point_closure[x].count() != 1) out.t1 = false;

  // Disjoint open neighborhoods, i.e. closed sets C1, C2 with x outside C1,
  // y outside C2, covering the space.
  out.t2 = true;
  for (std::size_t x = 0; x < n && out.t2; ++x)
    for (std::size_t y = x + 1; y < n && out.t2; ++y) {
      bool separated = false;
      for (std::size_t i = 0; i < sp.closed.size() && !separated; ++i) {
        if (sp.closed[i].test(x)) continue;
        for (std::size_t j = 0; j < sp.closed.size() && !separated; ++j) {
          if (sp.closed[j].test(y)) continue;
          if ((sp.closed[i] | sp.closed[j]) == full) separated = true;
        }
      }
      if (!separated) out.t2 = false;
    }

  out.discrete = true;
  for (std::size_t x = 0; x < n && out.discrete; ++x) {
    Bitset co = full;
    co.reset(x);
    if (!sp.is_closed(co)) out.discrete = false;
  }

  out.sober = is_sober(sp);
  return out;
}

}  // namespace znspec
