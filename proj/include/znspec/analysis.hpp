#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "znspec/lattice.hpp"
#include "znspec/module.hpp"
#include "znspec/ring.hpp"
#include "znspec/spectra.hpp"
#include "znspec/topology.hpp"

namespace znspec {

struct AnalysisBudget {
  std::int64_t element_budget = kDefaultElementBudget;
  std::int64_t member_budget = kDefaultMemberBudget;
};

// Everything derived from one instance, computed once. Immutable afterwards;
// all spectra, varieties, decisions and predicate flags live here so the
// check catalog and the CLI read from the same source.
struct InstanceAnalysis {
  Instance inst;
  RingZn ring;
  std::shared_ptr<const FiniteModule> mod;
  std::shared_ptr<const Lattice> lat;

  Spectrum spec_s, spec_c;
  std::vector<Bitset> var_s, var_c;      // per lattice member, over positions
  std::vector<std::int64_t> ann_div;     // ann_R(L) per member
  std::vector<std::int64_t> colon_top;   // (L :_R M) per member
  std::vector<char> coprime_in_def;      // K coprime in M, by definition
  std::vector<char> coprime_in_quot;     // K coprime in M, via M/K
  StructuralPredicates preds;
  std::vector<std::uint32_t> lc_params;  // members with (0 : (0 : L)) = L
  std::vector<std::uint32_t> lm_params;  // members of the form dM
  TopDecision top_s, top_c;
  std::optional<FiniteSpace> z_s, z_c;   // built only when the decision holds
  FiniteSpace z_s_c, z_c_m;              // always topologies
  bool spec_s_in_sh = false, spec_c_in_si = false;
  bool all_second_simple = false, all_coprime_maximal = false;

  explicit InstanceAnalysis(RingZn r) : ring(std::move(r)) {}

  std::uint32_t zero_id() const { return lat->zero_id(); }
  std::uint32_t top_id() const { return lat->top_id(); }

  // The requested space; the full-family kinds raise NotATopology with the
  // recorded witness pair when the variety family is not union-closed.
  const FiniteSpace& space(VarietyKind kind) const {
    switch (kind) {
      case VarietyKind::xi_s:
        if (!top_s.is_topology)
          throw NotATopology(top_s.witness->first, top_s.witness->second,
                             "the second-variety family of " + inst.label() +
                                 " is not closed under unions");
        return *z_s;
      case VarietyKind::xi_c:
        if (!top_c.is_topology)
          throw NotATopology(top_c.witness->first, top_c.witness->second,
                             "the coprime-variety family of " + inst.label() +
                                 " is not closed under unions");
        return *z_c;
      case VarietyKind::xi_s_c:
        return z_s_c;
      case VarietyKind::xi_c_m:
        break;
    }
    return z_c_m;
  }

  QuotientResult quotient(std::uint32_t member) const {
    return quotient_by(*mod, lat->at(member).gens, ring.modulus);
  }

  VarietyFamily variety_family(VarietyKind kind) const {
    VarietyFamily fam;
    fam.kind = kind;
    bool second_side = kind == VarietyKind::xi_s || kind == VarietyKind::xi_s_c;
    const std::vector<Bitset>& vars = second_side ? var_s : var_c;
    std::vector<std::uint32_t> all;
    if (kind == VarietyKind::xi_s || kind == VarietyKind::xi_c) {
      all.resize(lat->size());
      for (std::uint32_t i = 0; i < lat->size(); ++i) all[i] = i;
    }
    const std::vector<std::uint32_t>& params =
        kind == VarietyKind::xi_s_c ? lc_params
        : kind == VarietyKind::xi_c_m ? lm_params
                                      : all;
    for (auto p : params) fam.sets.emplace_back(p, vars[p]);
    return fam;
  }

  std::vector<std::string> hypothesis_classes() const {
    std::vector<std::string> out;
    auto tag = [&](bool cond, const char* name) {
      if (cond) out.emplace_back(name);
    };
    tag(inst.shape.factors.size() == 1, "cyclic");
    tag(preds.multiplication, "multiplication");
    tag(preds.comultiplication, "comultiplication");
    tag(preds.uniserial, "uniserial");
    tag(preds.semisimple, "semisimple");
    tag(preds.homogeneous_semisimple, "homogeneous-semisimple");
    tag(preds.coprime, "coprime");
    tag(preds.hollow, "hollow");
    tag(preds.local, "local");
    tag(preds.colocal, "colocal");
    tag(preds.uniform, "uniform");
    tag(preds.distributive, "distributive");
    tag(preds.completely_distributive, "completely-distributive");
    tag(preds.min_property, "min-property");
    tag(preds.complete_max_property, "complete-max-property");
    tag(top_s.is_topology, "top-s");
    tag(top_c.is_topology, "top-c");
    tag(spec_s_in_sh, "spec-s-strongly-hollow");
    tag(spec_c_in_si, "spec-c-strongly-irreducible");
    tag(all_second_simple, "all-second-simple");
    tag(all_coprime_maximal, "all-coprime-maximal");
    return out;
  }
};

// Lattices depend only on the invariant factors, so they are cached by the
// factor chain and shared across rings. The module stored with a shared
// lattice is stamped with the exponent as its modulus; analyses re-stamp the
// instance modulus wherever a shape escapes (quotients, labels).
class AnalysisCache {
 public:
  std::shared_ptr<const Lattice> lattice_for(const ModuleShape& shape,
                                             const AnalysisBudget& budget) {
    auto it = lattices_.find(shape.factors);
    if (it != lattices_.end()) return it->second;
    ModuleShape keyed = shape;
    keyed.modulus = shape.exponent();
    auto mod = std::make_shared<const FiniteModule>(keyed, budget.element_budget);
    auto lat = std::make_shared<const Lattice>(
        Lattice::enumerate(mod, budget.member_budget));
    lattices_.emplace(shape.factors, lat);
    return lat;
  }

  std::shared_ptr<const InstanceAnalysis> find_analysis(
      std::int64_t modulus, const std::vector<std::int64_t>& factors) const {
    auto it = analyses_.find({modulus, factors});
    return it == analyses_.end() ? nullptr : it->second;
  }
  void store_analysis(std::shared_ptr<const InstanceAnalysis> a) {
    analyses_[{a->ring.modulus, a->inst.shape.factors}] = std::move(a);
  }
  void drop_analyses() { analyses_.clear(); }

 private:
  std::map<std::vector<std::int64_t>, std::shared_ptr<const Lattice>> lattices_;
  std::map<std::pair<std::int64_t, std::vector<std::int64_t>>,
           std::shared_ptr<const InstanceAnalysis>>
      analyses_;
};

inline std::shared_ptr<const InstanceAnalysis> analyze(
    const Instance& inst, AnalysisCache* cache = nullptr,
    const AnalysisBudget& budget = {}) {
  if (cache)
    if (auto hit = cache->find_analysis(inst.modulus, inst.shape.factors)) {
      if (hit->inst.label() == inst.label()) return hit;
      auto copy = std::make_shared<InstanceAnalysis>(*hit);
      copy->inst = inst;
      return copy;
    }

  auto a = std::make_shared<InstanceAnalysis>(RingZn(inst.modulus));
  a->inst = inst;
  if (cache) {
    a->lat = cache->lattice_for(inst.shape, budget);
  } else {
    ModuleShape keyed = inst.shape;
    keyed.modulus = inst.shape.exponent();
    auto mod = std::make_shared<const FiniteModule>(keyed, budget.element_budget);
    a->lat = std::make_shared<const Lattice>(
        Lattice::enumerate(mod, budget.member_budget));
  }
  a->mod = a->lat->module_ptr();

  const Lattice& lat = *a->lat;
  const RingZn& ring = a->ring;
  const std::uint32_t n = lat.size();
  const std::uint32_t top = lat.top_id();

  a->spec_s = second_spectrum(ring, lat);
  a->spec_c = coprime_spectrum(ring, lat);

  a->var_s.reserve(n);
  a->var_c.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    a->var_s.push_back(variety_second(lat, a->spec_s, i));
    a->var_c.push_back(variety_coprime(lat, a->spec_c, i));
  }

  a->ann_div.resize(n);
  a->colon_top.resize(n);
  a->coprime_in_def.assign(n, 0);
  a->coprime_in_quot.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    a->ann_div[i] = annihilator_divisor(ring, lat, i);
    a->colon_top[i] = colon_top_divisor(ring, lat, i);
    if (i != top) {
      a->coprime_in_def[i] = coprime_in_status(ring, lat, i, top).holds ? 1 : 0;
      QuotientResult q = a->quotient(i);
      FiniteModule qm(q.shape);
      a->coprime_in_quot[i] = coprime_module_direct(ring, qm).holds ? 1 : 0;
    }
  }

  a->preds = structural_predicates(ring, lat);

  for (std::uint32_t i = 0; i < n; ++i) {
    if (lat.annihilator_kernel(a->ann_div[i]) == i) a->lc_params.push_back(i);
  }
  {
    Bitset seen(n);
    for (auto d : ring.divisors) seen.set(lat.scaled(d, top));
    a->lm_params = seen.to_list();
  }

  a->top_s = decide_topology(a->var_s);
  a->top_c = decide_topology(a->var_c);
  if (a->top_s.is_topology)
    a->z_s = build_space(a->spec_s, a->variety_family(VarietyKind::xi_s));
  if (a->top_c.is_topology)
    a->z_c = build_space(a->spec_c, a->variety_family(VarietyKind::xi_c));
  a->z_s_c = build_space(a->spec_s, a->variety_family(VarietyKind::xi_s_c));
  a->z_c_m = build_space(a->spec_c, a->variety_family(VarietyKind::xi_c_m));

  a->spec_s_in_sh = true;
  a->all_second_simple = true;
  for (auto s : a->spec_s.members) {
    if (!lat.strongly_hollow(s)) a->spec_s_in_sh = false;
    if (!lat.simples().test(s)) a->all_second_simple = false;
  }
  a->spec_c_in_si = true;
  a->all_coprime_maximal = true;
  for (auto s : a->spec_c.members) {
    if (!lat.strongly_irreducible(s)) a->spec_c_in_si = false;
    if (!lat.maximals().test(s)) a->all_coprime_maximal = false;
  }

  if (cache) cache->store_analysis(a);
  return a;
}

}  // namespace znspec
