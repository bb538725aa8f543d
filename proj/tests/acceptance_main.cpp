// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Pass the CLI binary path as argv[1] to exercise end-to-end determinism
// through the real executable.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "znspec/analysis.hpp"
#include "znspec/verify.hpp"

using namespace znspec;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& text, const std::function<bool(std::string&)>& fn) {
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": "
            << text;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string run_process(const std::string& cmd, int& exit_code) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return out;
  }
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const InstanceBudget kDefault;

  // Analyses shared by the instance-sweep criteria.
  AnalysisCache cache;
  AnalysisBudget ab{kDefault.max_order, kDefault.max_lattice};

  criterion(1, "coprime spectrum of Z/n is its maximal ideals for n in 2..60",
            [&](std::string& detail) {
              auto t0 = std::chrono::steady_clock::now();
              for (std::int64_t n = 2; n <= 60; ++n) {
                Instance inst = parse_instance("n=" + std::to_string(n) +
                                               ";M=" + std::to_string(n));
                auto a = analyze(inst, &cache, ab);
                Bitset expected(a->lat->size());
                for (auto p : a->ring.primes)
                  expected.set(a->lat->scaled(p, a->top_id()));
                if (a->spec_c.member_set != expected) return false;
                if (a->spec_c.member_set != a->lat->maximals()) return false;
              }
              double dt = seconds_since(t0);
              detail = "exact equality for all n, " + std::to_string(dt) + "s";
              return dt < 1.0;
            });

  criterion(2, "second spectrum of Z/n is its minimal nonzero ideals for n in 2..60",
            [&](std::string& detail) {
              auto t0 = std::chrono::steady_clock::now();
              for (std::int64_t n = 2; n <= 60; ++n) {
                Instance inst = parse_instance("n=" + std::to_string(n) +
                                               ";M=" + std::to_string(n));
                auto a = analyze(inst, &cache, ab);
                Bitset expected(a->lat->size());
                for (auto p : a->ring.primes)
                  expected.set(a->lat->scaled(n / p, a->top_id()));
                if (a->spec_s.member_set != expected) return false;
                if (a->spec_s.member_set != a->lat->simples()) return false;
              }
              double dt = seconds_since(t0);
              detail = "exact equality for all n, " + std::to_string(dt) + "s";
              return dt < 1.0;
            });

  criterion(3, "Z/2 + Z/3 over Z/6 is not coprime, least witness ideal (2), witness valid",
            [&](std::string& detail) {
              auto a = analyze(parse_instance("n=6;M=2,3"), &cache, ab);
              if (a->preds.coprime) return false;
              if (!a->preds.coprime_witness || *a->preds.coprime_witness != 2)
                return false;
              std::uint32_t im = a->lat->scaled(*a->preds.coprime_witness, a->top_id());
              detail = "witness (2), 2M = " + a->lat->member_name(im);
              return im != a->zero_id() && im != a->top_id();
            });

  criterion(4, "(Z/p)^2 for p in {2,3}: spectra full, top decisions false with "
               "verified witnesses, restricted spaces valid",
            [&](std::string&) {
              for (const char* text : {"n=2;M=2,2", "n=3;M=3,3"}) {
                auto a = analyze(parse_instance(text), &cache, ab);
                const Lattice& lat = *a->lat;
                for (std::uint32_t i = 1; i < lat.size(); ++i)
                  if (!a->spec_s.member_set.test(i)) return false;
                if (a->spec_s.member_set.test(a->zero_id())) return false;
                for (std::uint32_t i = 0; i + 1 < lat.size(); ++i)
                  if (!a->spec_c.member_set.test(i)) return false;
                if (a->spec_c.member_set.test(a->top_id())) return false;
                if (a->top_s.is_topology || a->top_c.is_topology) return false;
                if (!a->top_s.witness || !verify_top_witness(a->var_s, *a->top_s.witness))
                  return false;
                if (!a->top_c.witness || !verify_top_witness(a->var_c, *a->top_c.witness))
                  return false;
                if (!verify_axioms(a->z_s_c) || !verify_axioms(a->z_c_m)) return false;
              }
              return true;
            });

  criterion(5, "closure formulas hold on every in-budget topological instance "
               "(all subsets up to 12 points, 200 samples beyond)",
            [&](std::string& detail) {
              std::size_t exercised_s = 0, exercised_c = 0;
              for (const Instance& inst : enumerate_instances(kDefault)) {
                std::shared_ptr<const InstanceAnalysis> a;
                try {
                  a = analyze(inst, &cache, ab);
                } catch (const BudgetExceeded&) {
                  continue;
                }
                std::string note;
                if (a->top_s.is_topology) {
                  ++exercised_s;
                  auto pool = checks::subset_pool(*a, a->spec_s.size(), "closure-s", 0, note);
                  for (const auto& sub : pool) {
                    Bitset topo = closure(*a->z_s, sub);
                    if (topo != a->var_s[sum_of_points(*a->lat, a->spec_s, sub)])
                      return false;
                  }
                }
                if (a->top_c.is_topology) {
                  ++exercised_c;
                  auto pool = checks::subset_pool(*a, a->spec_c.size(), "closure-c", 0, note);
                  for (const auto& sub : pool) {
                    Bitset topo = closure(*a->z_c, sub);
                    if (topo != a->var_c[intersection_of_points(*a->lat, a->spec_c, sub)])
                      return false;
                  }
                }
              }
              detail = std::to_string(exercised_s) + " second-side and " +
                       std::to_string(exercised_c) + " coprime-side instances";
              return exercised_s > 0 && exercised_c > 0;
            });

  criterion(6, "full catalog over n<=60, order<=128, lattice<=5000, rank<=4: "
               "zero failures, all checks exercised or explained",
            [&](std::string& detail) {
              auto t0 = std::chrono::steady_clock::now();
              SuiteReport report = run_suite(kDefault);
              double dt = seconds_since(t0);
              Json doc = report.to_json();
              detail = std::to_string(report.instances.size()) + " instances, " +
                       std::to_string(report.rows.size()) + " results, " +
                       std::to_string(dt) + "s";
              return report.failures() == 0 &&
                     doc["summary"]["all_non_vacuous_or_explained"] == true &&
                     dt < 300.0;
            });

  criterion(7, "equivalence chains agree pairwise on every applicable instance",
            [&](std::string& detail) {
              std::size_t t2_cases = 0, c_t2_cases = 0;
              for (const Instance& inst : enumerate_instances(kDefault)) {
                std::shared_ptr<const InstanceAnalysis> a;
                try {
                  a = analyze(inst, &cache, ab);
                } catch (const BudgetExceeded&) {
                  continue;
                }
                const Lattice& lat = *a->lat;
                // coprimality of M: three routes
                bool by_def = a->preds.coprime;
                bool by_ann = true, by_all = true;
                for (std::uint32_t l = 0; l < a->top_id(); ++l) {
                  if (a->colon_top[l] != a->ann_div[a->top_id()]) by_ann = false;
                  if (!a->coprime_in_def[l]) by_all = false;
                }
                if (by_def != by_ann || by_ann != by_all) return false;
                // coprime-in: definitional route vs quotient route
                for (std::uint32_t k = 0; k < a->top_id(); ++k)
                  if (a->coprime_in_def[k] != a->coprime_in_quot[k]) return false;
                // T2 chains where the hypotheses apply
                if (a->top_s.is_topology && a->preds.min_property) {
                  ++t2_cases;
                  TopologicalProperties p = topological_properties(*a->z_s);
                  bool c1 = a->spec_s.member_set == lat.simples();
                  if (c1 != p.discrete || p.discrete != p.t2 || p.t2 != p.t1)
                    return false;
                }
                if (a->top_c.is_topology && a->preds.complete_max_property) {
                  ++c_t2_cases;
                  TopologicalProperties p = topological_properties(*a->z_c);
                  bool c1 = a->spec_c.member_set == lat.maximals();
                  if (c1 != p.discrete || p.discrete != p.t2 || p.t2 != p.t1)
                    return false;
                }
              }
              detail = std::to_string(t2_cases) + " T2 chains, " +
                       std::to_string(c_t2_cases) + " dual chains";
              return t2_cases > 0 && c_t2_cases > 0;
            });

  criterion(8, "second spectrum matches the prime-annihilator locus and the "
               "generalized associated primes on comultiplication instances",
            [&](std::string& detail) {
              std::size_t exercised = 0;
              for (const Instance& inst : enumerate_instances(kDefault)) {
                std::shared_ptr<const InstanceAnalysis> a;
                try {
                  a = analyze(inst, &cache, ab);
                } catch (const BudgetExceeded&) {
                  continue;
                }
                if (!a->preds.comultiplication) continue;
                ++exercised;
                const Lattice& lat = *a->lat;
                Bitset locus(lat.size());
                for (std::uint32_t i = 1; i < lat.size(); ++i)
                  if (is_prime_number(a->ann_div[i])) locus.set(i);
                if (a->spec_s.member_set != locus) return false;
                // bijection with the generalized associated primes
                std::vector<std::int64_t> ass =
                    generalized_associated_primes(a->ring, lat);
                if (ass.size() != a->spec_s.size()) return false;
                for (auto l : a->spec_s.members) {
                  if (lat.annihilator_kernel(a->ann_div[l]) != l) return false;
                  if (std::find(ass.begin(), ass.end(), a->ann_div[l]) == ass.end())
                    return false;
                }
              }
              detail = std::to_string(exercised) + " comultiplication instances";
              return exercised > 0;
            });

  criterion(9, "verify runs are byte-identical",
            [&](std::string& detail) {
              if (!cli.empty()) {
                std::string cmd = cli +
                                  " verify --max-modulus 20 --max-order 32 "
                                  "--format json";
                int code1 = 0, code2 = 0;
                std::string first = run_process(cmd, code1);
                std::string second = run_process(cmd, code2);
                detail = "via CLI, " + std::to_string(first.size()) + " bytes";
                return code1 == 0 && code2 == 0 && !first.empty() &&
                       first == second;
              }
              InstanceBudget b;
              b.max_modulus = 20;
              b.max_order = 32;
              detail = "in-process";
              return run_suite(b).to_json().dump(2) ==
                     run_suite(b).to_json().dump(2);
            });

  std::cout << (g_failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: FAILURES present\n");
  return g_failures == 0 ? 0 : 1;
}
