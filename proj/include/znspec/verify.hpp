#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "znspec/analysis.hpp"
#include "znspec/version.hpp"

namespace znspec {

using Json = nlohmann::ordered_json;

struct InstanceBudget {
  std::int64_t max_modulus = 60;
  std::int64_t max_order = 128;
  std::int64_t max_lattice = 5000;
  std::int64_t max_rank = 4;

  void validate() const {
    if (max_modulus < 2)
      throw InvalidBudget("max-modulus must be at least 2");
    if (max_order < 2)
      throw InvalidBudget("max-order must be at least 2 (modules are non-zero)");
    if (max_lattice < 2)
      throw InvalidBudget("max-lattice must be at least 2");
    if (max_rank < 1) throw InvalidBudget("max-rank must be at least 1");
  }
};

enum class CheckStatus { Pass, Vacuous, Fail, Skipped };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Vacuous: return "vacuous";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

struct CheckOutcome {
  CheckStatus status = CheckStatus::Vacuous;
  Json witness;  // replayable data, only on fail
  std::string note;
};

struct CheckDescriptor {
  std::string id;
  std::string statement;
  std::vector<std::string> hypotheses;  // predicate names gating the check
  std::string unattainable_reason;  // nonempty when no finite instance fits
  std::function<CheckOutcome(const InstanceAnalysis&)> run;
};

// All nondecreasing lists of divisors of n (each >= 2) within the budget,
// ordered by (n, length, lexicographic list).
inline std::vector<Instance> enumerate_instances(const InstanceBudget& b) {
  b.validate();
  std::vector<Instance> out;
  for (std::int64_t n = 2; n <= b.max_modulus; ++n) {
    std::vector<std::int64_t> divs;
    for (std::int64_t d = 2; d <= n; ++d)
      if (n % d == 0) divs.push_back(d);
    for (std::int64_t k = 1; k <= b.max_rank; ++k) {
      std::vector<std::int64_t> cur;
      std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t start,
                                                               std::int64_t prod) {
        if (static_cast<std::int64_t>(cur.size()) == k) {
          Instance inst;
          inst.modulus = n;
          inst.summands = cur;
          inst.shape = canonical_shape(n, cur);
          out.push_back(std::move(inst));
          return;
        }
        for (std::size_t i = start; i < divs.size(); ++i) {
          if (prod > b.max_order / divs[i]) break;
          cur.push_back(divs[i]);
          rec(i, prod * divs[i]);
          cur.pop_back();
        }
      };
      rec(0, 1);
    }
  }
  return out;
}

namespace checks {

inline CheckOutcome pass(std::string note = "") {
  return {CheckStatus::Pass, Json(), std::move(note)};
}
inline CheckOutcome vacuous(std::string note = "") {
  return {CheckStatus::Vacuous, Json(), std::move(note)};
}
inline CheckOutcome fail(Json witness, std::string note = "") {
  return {CheckStatus::Fail, std::move(witness), std::move(note)};
}

inline Json member_json(const InstanceAnalysis& a, std::uint32_t id) {
  return Json{{"id", id}, {"name", a.lat->member_name(id)}};
}

inline Json subset_json(const InstanceAnalysis& a, const Spectrum& spec,
                        const Bitset& subset) {
  Json arr = Json::array();
  subset.for_each([&](std::size_t p) {
    arr.push_back(member_json(a, spec.members[p]));
  });
  return arr;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Subsets of a point set: exhaustive up to 12 points, otherwise the full
// set, all singletons, and 200 seeded pseudo-random draws.
inline std::vector<Bitset> subset_pool(const InstanceAnalysis& a,
                                       std::size_t npoints, const char* salt,
                                       std::size_t min_size, std::string& note) {
  std::vector<Bitset> pool;
  if (npoints <= 12) {
    note = "exhaustive over all subsets";
    for (std::uint32_t mask = 0; mask < (1u << npoints); ++mask) {
      Bitset s(npoints);
      for (std::size_t p = 0; p < npoints; ++p)
        if (mask & (1u << p)) s.set(p);
      if (s.count() >= min_size) pool.push_back(std::move(s));
    }
  } else {
    note = "sampled 200 subsets, deterministic seed";
    {
      Bitset full(npoints);
      for (std::size_t p = 0; p < npoints; ++p) full.set(p);
      pool.push_back(std::move(full));
    }
    if (min_size <= 1)
      for (std::size_t p = 0; p < npoints; ++p) {
        Bitset s(npoints);
        s.set(p);
        pool.push_back(std::move(s));
      }
    std::uint64_t seed = fnv1a(a.inst.label()) ^ fnv1a(salt);
    std::mt19937 eng(static_cast<std::uint32_t>(seed ^ (seed >> 32)));
    for (int t = 0; t < 200; ++t) {
      Bitset s(npoints);
      for (std::size_t p = 0; p < npoints; ++p)
        if (eng() & 1) s.set(p);
      if (s.count() >= min_size) pool.push_back(std::move(s));
    }
  }
  return pool;
}

inline Bitset nonzero_members(const Lattice& lat) {
  Bitset b(lat.size());
  for (std::uint32_t i = 1; i < lat.size(); ++i) b.set(i);
  return b;
}
inline Bitset proper_members(const Lattice& lat) {
  Bitset b(lat.size());
  for (std::uint32_t i = 0; i + 1 < lat.size(); ++i) b.set(i);
  return b;
}

// Internal direct decompositions M = A (+) B with both parts nonzero.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> decompositions(
    const Lattice& lat) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const std::uint64_t total = lat.at(lat.top_id()).card;
  for (std::uint32_t a = 1; a + 1 < lat.size(); ++a) {
    for (std::uint32_t b = a; b + 1 < lat.size(); ++b) {
      if (static_cast<std::uint64_t>(lat.at(a).card) * lat.at(b).card != total)
        continue;
      if (lat.meet(a, b) != lat.zero_id()) continue;
      if (lat.join(a, b) != lat.top_id()) continue;
      out.emplace_back(a, b);
    }
  }
  return out;
}

// Spec^c of a member seen as a module in its own right is empty?
inline bool member_coprimeless(const RingZn& ring, const Lattice& lat,
                               std::uint32_t amb) {
  std::vector<std::uint32_t> subs = lat.below(amb).to_list();
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    if (*it == amb) continue;
    if (coprime_in_status(ring, lat, *it, amb).holds) return false;
  }
  return true;
}

// M/K divisible over (Z/nZ)/(q): every non-zero-divisor residue acts onto.
// Zero-divisors of Z/qZ are found by exhaustion.
inline bool quotient_divisible(const InstanceAnalysis& a,
                               std::uint32_t k_id, std::int64_t q) {
  QuotientResult qr = a.quotient(k_id);
  FiniteModule qm(qr.shape);
  for (std::int64_t r = 0; r < q; ++r) {
    bool zero_divisor = r == 0;
    for (std::int64_t s = 1; s < q && !zero_divisor; ++s)
      if ((r * s) % q == 0) zero_divisor = true;
    if (zero_divisor) continue;
    Bitset image(qm.size());
    for (std::uint32_t x = 0; x < qm.size(); ++x)
      image.set(qm.smul(r, static_cast<FiniteModule::Elt>(x)));
    if (image.count() != qm.size()) return false;
  }
  return true;
}

}  // namespace checks

inline const std::vector<CheckDescriptor>& check_catalog();

inline const CheckDescriptor& find_check(const std::string& id) {
  for (const auto& c : check_catalog())
    if (c.id == id) return c;
  throw ParseError("unknown check id '" + id + "'");
}

inline CheckOutcome run_check(const CheckDescriptor& check,
                              const InstanceAnalysis& a) {
  return check.run(a);
}

// ---------------------------------------------------------------------------
// Suite driver

struct SuiteRow {
  std::string check_id;
  std::string instance;
  CheckStatus status = CheckStatus::Vacuous;
  Json witness;
  std::string note;
};

struct SuiteInstanceInfo {
  std::string label;
  std::string canonical;
  bool skipped = false;
  std::string skip_reason;
  std::vector<std::string> classes;
};

struct SuiteReport {
  InstanceBudget budget;
  std::vector<std::string> active_checks;
  std::vector<SuiteInstanceInfo> instances;
  std::vector<SuiteRow> rows;
  // Instances where binary distributivity and the bounded-family complete
  // form disagree. Expected empty on finite lattices; recorded, not assumed.
  std::vector<std::string> distributive_divergences;

  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& r : rows)
      if (r.status == CheckStatus::Fail) ++f;
    return f;
  }

  Json to_json() const {
    const auto& catalog = check_catalog();
    Json doc;
    doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    doc["command"] = "verify";
    doc["budget"] = {{"max_modulus", budget.max_modulus},
                     {"max_order", budget.max_order},
                     {"max_lattice", budget.max_lattice},
                     {"max_rank", budget.max_rank}};
    doc["checks_filter"] = active_checks;

    Json inst = Json::array();
    for (const auto& i : instances) {
      Json row{{"instance", i.label}, {"canonical", i.canonical}};
      if (i.skipped) {
        row["skipped"] = true;
        row["reason"] = i.skip_reason;
      } else {
        row["classes"] = i.classes;
      }
      inst.push_back(std::move(row));
    }
    doc["instances"] = std::move(inst);

    Json results = Json::array();
    for (const auto& r : rows) {
      Json row{{"check_id", r.check_id},
               {"instance", r.instance},
               {"status", status_name(r.status)}};
      if (!r.witness.is_null()) row["witness"] = r.witness;
      if (!r.note.empty()) row["note"] = r.note;
      results.push_back(std::move(row));
    }
    doc["results"] = std::move(results);

    std::map<std::string, std::array<std::size_t, 4>> counts;
    for (const auto& r : rows)
      counts[r.check_id][static_cast<std::size_t>(r.status)]++;
    Json checks = Json::array();
    bool all_explained = true;
    for (const auto& c : catalog) {
      if (!active_checks.empty() &&
          std::find(active_checks.begin(), active_checks.end(), c.id) ==
              active_checks.end())
        continue;
      auto it = counts.find(c.id);
      std::array<std::size_t, 4> k{0, 0, 0, 0};
      if (it != counts.end()) k = it->second;
      std::size_t non_vacuous = k[0] + k[2];
      Json row{{"id", c.id},
               {"statement", c.statement},
               {"hypotheses", c.hypotheses},
               {"pass", k[0]},
               {"vacuous", k[1]},
               {"fail", k[2]},
               {"skipped", k[3]},
               {"non_vacuous_instances", non_vacuous}};
      if (non_vacuous == 0) {
        if (!c.unattainable_reason.empty()) {
          row["unattainable_reason"] = c.unattainable_reason;
        } else {
          row["flagged"] = true;
          all_explained = false;
        }
      }
      checks.push_back(std::move(row));
    }
    doc["summary"] = {{"instances", instances.size()},
                      {"failures", failures()},
                      {"checks", std::move(checks)},
                      {"all_non_vacuous_or_explained", all_explained},
                      {"distributive_not_completely_distributive",
                       distributive_divergences}};
    return doc;
  }
};

inline SuiteReport run_suite(const InstanceBudget& budget,
                             const std::vector<std::string>& filter = {}) {
  budget.validate();
  const auto& catalog = check_catalog();
  std::vector<const CheckDescriptor*> active;
  for (const auto& want : filter) {
    bool known = false;
    for (const auto& c : catalog)
      if (c.id == want) known = true;
    if (!known) throw ParseError("unknown check id '" + want + "'");
  }
  for (const auto& c : catalog)
    if (filter.empty() ||
        std::find(filter.begin(), filter.end(), c.id) != filter.end())
      active.push_back(&c);

  SuiteReport report;
  report.budget = budget;
  report.active_checks = filter;

  AnalysisCache cache;
  AnalysisBudget ab{budget.max_order, budget.max_lattice};
  // Outcomes depend only on the canonical instance, so duplicate summand
  // presentations are served from this map.
  std::map<std::string, std::vector<CheckOutcome>> outcome_cache;

  for (const Instance& inst : enumerate_instances(budget)) {
    SuiteInstanceInfo info;
    info.label = inst.label();
    info.canonical = inst.shape.label();

    std::shared_ptr<const InstanceAnalysis> a;
    try {
      a = analyze(inst, &cache, ab);
    } catch (const BudgetExceeded& e) {
      info.skipped = true;
      info.skip_reason = e.what();
      report.instances.push_back(std::move(info));
      for (const auto* c : active)
        report.rows.push_back(
            {c->id, inst.label(), CheckStatus::Skipped, Json(), e.what()});
      continue;
    }
    info.classes = a->hypothesis_classes();
    report.instances.push_back(std::move(info));
    if (a->preds.distributive != a->preds.completely_distributive)
      report.distributive_divergences.push_back(inst.label());

    std::string key = inst.shape.label();
    auto cached = outcome_cache.find(key);
    if (cached == outcome_cache.end()) {
      std::vector<CheckOutcome> outs;
      outs.reserve(active.size());
      for (const auto* c : active) outs.push_back(c->run(*a));
      cached = outcome_cache.emplace(key, std::move(outs)).first;
    }
    for (std::size_t i = 0; i < active.size(); ++i) {
      const CheckOutcome& o = cached->second[i];
      report.rows.push_back(
          {active[i]->id, inst.label(), o.status, o.witness, o.note});
    }
  }
  return report;
}

}  // namespace znspec

#include "znspec/verify_catalog.hpp"
