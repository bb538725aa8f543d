#pragma once

// The executable statement catalog. Each entry evaluates its hypotheses on
// one analyzed instance and tests the conclusion by exhaustion, reporting
// vacuous when the hypotheses are unmet and a replayable witness on failure.

#include "znspec/verify.hpp"

namespace znspec {
namespace checks {

inline std::vector<std::uint32_t> coradical_vector(const InstanceAnalysis& a) {
  std::vector<std::uint32_t> v(a.lat->size());
  for (std::uint32_t i = 0; i < a.lat->size(); ++i)
    v[i] = coradical_second(*a.lat, a.spec_s, i);
  return v;
}

inline std::vector<std::uint32_t> radical_vector(const InstanceAnalysis& a) {
  std::vector<std::uint32_t> v(a.lat->size());
  for (std::uint32_t i = 0; i < a.lat->size(); ++i)
    v[i] = radical_coprime(*a.lat, a.spec_c, i);
  return v;
}

inline Bitset positions_of(const Spectrum& spec, const Bitset& member_ids) {
  Bitset out(spec.size());
  for (std::uint32_t p = 0; p < spec.members.size(); ++p)
    if (member_ids.test(spec.members[p])) out.set(p);
  return out;
}

// --- section 3 statements ---------------------------------------------------

inline CheckOutcome run_prop_im(const InstanceAnalysis& a) {
  const Lattice& lat = *a.lat;
  const std::uint32_t top = lat.top_id();
  bool by_definition = a.preds.coprime;
  bool by_annihilators = true;
  bool by_all_proper = true;
  std::int64_t ann_m = a.ann_div[top];
  for (std::uint32_t l = 0; l < top; ++l) {
    if (a.colon_top[l] != ann_m) by_annihilators = false;
    if (!a.coprime_in_def[l]) by_all_proper = false;
  }
  if (by_definition == by_annihilators && by_annihilators == by_all_proper)
    return pass();
  return fail(Json{{"by_definition", by_definition},
                   {"by_annihilators", by_annihilators},
                   {"by_all_proper_coprime", by_all_proper}});
}

inline CheckOutcome run_prop_im_k(const InstanceAnalysis& a) {
  const Lattice& lat = *a.lat;
  const std::uint32_t top = lat.top_id();
  for (std::uint32_t k = 0; k < top; ++k) {
    bool x_def = a.coprime_in_def[k];
    bool x_quot = a.coprime_in_quot[k];
    bool x_over_def = true, x_over_quot = true;
    a.lat->above(k).for_each([&](std::size_t l) {
      if (l == top) return;
      if (!a.coprime_in_def[l]) x_over_def = false;
      if (!a.coprime_in_quot[l]) x_over_quot = false;
    });
    if (x_def != x_quot || x_def != x_over_def || x_def != x_over_quot)
      return fail(Json{{"submodule", member_json(a, k)},
                       {"by_definition", x_def},
                       {"by_quotient", x_quot},
                       {"all_overmodules_by_definition", x_over_def},
                       {"all_overmodules_by_quotient", x_over_quot}});
  }
  return pass();
}

inline CheckOutcome run_prop_c_exact(const InstanceAnalysis& a) {
  const Lattice& lat = *a.lat;
  const std::uint32_t top = lat.top_id();
  if (lat.size() <= 2) return vacuous("no intermediate submodule exists");
  if (a.spec_c.members.empty()) return vacuous("coprime spectrum empty");
  for (std::uint32_t l = 1; l < top; ++l) {
    QuotientResult qr = a.quotient(l);
    FiniteModule qm(qr.shape);
    for (auto k : a.spec_c.members) {
      bool ok = false;
      std::uint32_t kl = lat.meet(k, l);
      if (kl != l && coprime_in_status(a.ring, lat, kl, l).holds) ok = true;
      if (!ok) {
        std::uint32_t su = lat.join(k, l);
        if (su != top) {
          Bitset image(qm.size());
          lat.at(k).elems.for_each(
              [&](std::size_t x) { image.set(qr.projection[x]); });
          ok = coprime_in_direct(a.ring, qm, image).holds;
        }
      }
      if (!ok)
        return fail(Json{{"coprime", member_json(a, k)},
                         {"through", member_json(a, l)}});
    }
  }
  return pass();
}

inline CheckOutcome run_lem_cop_prime(const InstanceAnalysis& a) {
  for (auto l : a.spec_s.members)
    if (!is_prime_number(a.ann_div[l]))
      return fail(Json{{"second", member_json(a, l)},
                       {"annihilator_divisor", a.ann_div[l]}});
  for (auto k : a.spec_c.members)
    if (!is_prime_number(a.colon_top[k]))
      return fail(Json{{"coprime", member_json(a, k)},
                       {"colon_divisor", a.colon_top[k]}});
  return pass();
}

inline CheckOutcome run_prop_c_ann_1(const InstanceAnalysis& a) {
  if (!a.preds.multiplication) return vacuous();
  bool simple = a.lat->size() == 2;
  if (a.preds.coprime == simple) return pass();
  return fail(Json{{"coprime", a.preds.coprime}, {"simple", simple}});
}

inline CheckOutcome run_prop_c_ann_2(const InstanceAnalysis& a) {
  if (!a.preds.comultiplication) return vacuous();
  bool prime_ann = is_prime_number(a.ann_div[a.lat->top_id()]);
  if (a.preds.coprime == prime_ann) return pass();
  return fail(Json{{"coprime", a.preds.coprime},
                   {"annihilator_divisor", a.ann_div[a.lat->top_id()]}});
}

inline CheckOutcome run_cor_mult_comult(const InstanceAnalysis& a) {
  if (!a.preds.multiplication || !a.preds.comultiplication) return vacuous();
  bool coprime = a.preds.coprime;
  bool prime_ann = is_prime_number(a.ann_div[a.lat->top_id()]);
  bool simple = a.lat->size() == 2;
  if (coprime == prime_ann && prime_ann == simple) return pass();
  return fail(Json{{"coprime", coprime},
                   {"prime_annihilator", prime_ann},
                   {"simple", simple}});
}

inline CheckOutcome run_cor_com_s(const InstanceAnalysis& a) {
  if (!a.preds.comultiplication) return vacuous();
  const Lattice& lat = *a.lat;
  Bitset by_prime_ann(lat.size());
  for (std::uint32_t i = 1; i < lat.size(); ++i)
    if (is_prime_number(a.ann_div[i])) by_prime_ann.set(i);
  if (a.spec_s.member_set != by_prime_ann)
    return fail(Json{{"mismatch", "second spectrum vs prime-annihilator set"}});
  if (a.spec_s.member_set != lat.simples())
    return fail(Json{{"mismatch", "second spectrum vs simple submodules"}});
  return pass();
}

inline CheckOutcome run_cor_r_s_c(const InstanceAnalysis& a) {
  if (a.inst.shape.factors != std::vector<std::int64_t>{a.ring.modulus})
    return vacuous("module is not the ring itself");
  const Lattice& lat = *a.lat;
  Bitset prime_multiples(lat.size());
  Bitset prime_kernels(lat.size());
  for (auto p : a.ring.primes) {
    prime_multiples.set(lat.scaled(p, lat.top_id()));
    prime_kernels.set(lat.scaled(a.ring.modulus / p, lat.top_id()));
  }
  if (a.spec_c.member_set != lat.maximals() ||
      a.spec_c.member_set != prime_multiples)
    return fail(Json{{"mismatch", "coprime spectrum vs maximal ideals"}});
  if (a.spec_s.member_set != lat.simples() ||
      a.spec_s.member_set != prime_kernels)
    return fail(Json{{"mismatch", "second spectrum vs minimal ideals"}});
  return pass();
}

inline CheckOutcome run_rem_gen_ass(const InstanceAnalysis& a) {
  if (!a.preds.comultiplication) return vacuous();
  const Lattice& lat = *a.lat;
  std::vector<std::int64_t> ass;
  for (auto p : a.ring.primes) {
    bool found = false;
    for (std::uint32_t i = 0; i < lat.size() && !found; ++i)
      if (a.ann_div[i] == p) found = true;
    if (found) ass.push_back(p);
  }
  std::vector<std::int64_t> images;
  for (auto l : a.spec_s.members) {
    std::int64_t p = a.ann_div[l];
    if (lat.annihilator_kernel(p) != l)
      return fail(Json{{"second", member_json(a, l)},
                       {"note", "kernel of annihilator does not recover it"}});
    images.push_back(p);
  }
  std::sort(images.begin(), images.end());
  if (images != ass ||
      std::adjacent_find(images.begin(), images.end()) != images.end())
    return fail(Json{{"note", "annihilators of seconds do not biject with "
                              "generalized associated primes"}});
  for (auto p : ass) {
    std::uint32_t k = lat.annihilator_kernel(p);
    if (!a.spec_s.member_set.test(k) || a.ann_div[k] != p)
      return fail(Json{{"prime", p}});
  }
  return pass();
}

inline CheckOutcome run_lem_coprime_div(const InstanceAnalysis& a) {
  const std::uint32_t top = a.lat->top_id();
  for (std::uint32_t k = 0; k < top; ++k) {
    std::int64_t q = a.colon_top[k];
    bool rhs = is_prime_number(q) && quotient_divisible(a, k, q);
    if (static_cast<bool>(a.coprime_in_def[k]) != rhs)
      return fail(Json{{"submodule", member_json(a, k)},
                       {"coprime_in", static_cast<bool>(a.coprime_in_def[k])},
                       {"colon_divisor", q},
                       {"prime_and_divisible", rhs}});
  }
  return pass();
}

inline CheckOutcome run_prop_div_2(const InstanceAnalysis& a) {
  const Lattice& lat = *a.lat;
  bool applied = false;
  for (std::uint32_t l = 1; l < lat.size(); ++l) {
    if (!relatively_divisible(a.ring, lat, l)) continue;
    for (auto k : a.spec_c.members) {
      if (k == l || !lat.leq(k, l)) continue;
      applied = true;
      if (!coprime_in_status(a.ring, lat, k, l).holds)
        return fail(Json{{"coprime", member_json(a, k)},
                         {"relatively_divisible", member_json(a, l)}});
    }
  }
  return applied ? pass() : vacuous("no applicable pair");
}

inline CheckOutcome run_prop_sum_cop(const InstanceAnalysis& a) {
  const Lattice& lat = *a.lat;
  auto decs = decompositions(lat);
  if (decs.empty()) return vacuous("module is directly indecomposable");
  for (auto [x, y] : decs) {
    bool cx = coprime_module_status(a.ring, lat, x).holds;
    bool cy = coprime_module_status(a.ring, lat, y).holds;
    if (a.preds.coprime && !(cx && cy))
      return fail(Json{{"left", member_json(a, x)},
                       {"right", member_json(a, y)},
                       {"note", "coprime sum with a non-coprime summand"}});
    if (a.ann_div[x] == a.ann_div[y] && a.preds.coprime != (cx && cy))
      return fail(Json{{"left", member_json(a, x)},
                       {"right", member_json(a, y)},
                       {"note", "equal-annihilator equivalence broke"}});
  }
  return pass();
}

inline CheckOutcome run_prop_sum_less(const InstanceAnalysis& a) {
  const Lattice& lat = *a.lat;
  for (auto [x, y] : decompositions(lat)) {
    if (!member_coprimeless(a.ring, lat, x)) continue;
    if (!member_coprimeless(a.ring, lat, y)) continue;
    if (!a.spec_c.members.empty())
      return fail(Json{{"left", member_json(a, x)}, {"right", member_json(a, y)}});
    return pass();
  }
  return vacuous("no decomposition into coprimeless summands");
}

inline CheckOutcome run_ex_acc(const InstanceAnalysis& a) {
  const Lattice& lat = *a.lat;
  const std::uint32_t top = lat.top_id();
  std::vector<std::int64_t> shrinking;
  for (auto p : a.ring.primes)
    if (lat.scaled(p, top) != top) shrinking.push_back(p);
  if (shrinking.empty())
    return fail(Json{{"note", "no prime ideal moves the module"}});
  for (auto p : shrinking)
    if (!a.coprime_in_def[lat.scaled(p, top)])
      return fail(Json{{"prime", p}});
  if (a.spec_c.members.empty())
    return fail(Json{{"note", "coprime spectrum empty"}});
  return pass();
}

inline CheckOutcome run_lem_s_max(const InstanceAnalysis& a) {
  if (!a.preds.comultiplication) return vacuous();
  const Lattice& lat = *a.lat;
  for (std::uint32_t l = 1; l < lat.size(); ++l) {
    const Bitset& v = a.var_s[l];
    if (v.none()) return fail(Json{{"under", member_json(a, l)}});
    bool has_max = false;
    v.for_each([&](std::size_t p) {
      bool maximal = true;
      v.for_each([&](std::size_t q) {
        if (p != q && lat.leq(a.spec_s.members[p], a.spec_s.members[q]))
          maximal = false;
      });
      if (maximal) has_max = true;
    });
    if (!has_max) return fail(Json{{"under", member_json(a, l)}});
  }
  return pass();
}

// Family-intersection identity for second varieties, over all families of
// size two and three plus the full family; the bound is recorded in the note.
inline CheckOutcome run_lem_s_prop_2(const InstanceAnalysis& a) {
  const Lattice& lat = *a.lat;
  const std::uint32_t n = lat.size();
  bool triples = n <= 1024;
  std::string note = triples ? "families of size <= 3 plus the full family"
                             : "pair families plus the full family";
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i; j < n; ++j) {
      std::uint32_t mij = lat.meet(i, j);
      Bitset lhs = a.var_s[i] & a.var_s[j];
      if (lhs != a.var_s[mij])
        return fail(Json{{"pair", Json::array({member_json(a, i), member_json(a, j)})}},
                    note);
      if (!triples) continue;
      for (std::uint32_t k = j; k < n; ++k)
        if (!Bitset::and_equals(lhs, a.var_s[k], a.var_s[lat.meet(mij, k)]))
          return fail(Json{{"triple", Json::array({member_json(a, i), member_json(a, j),
                                                   member_json(a, k)})}},
                      note);
    }
  Bitset all(a.spec_s.size());
  for (std::uint32_t p = 0; p < a.spec_s.size(); ++p) all.set(p);
  std::uint32_t bottom = lat.top_id();
  for (std::uint32_t i = 0; i < n; ++i) {
    all &= a.var_s[i];
    bottom = lat.meet(bottom, i);
  }
  if (all != a.var_s[bottom]) return fail(Json{{"family", "all members"}}, note);
  return pass(note);
}

// Dual identity: intersections of coprime varieties collapse along sums.
inline CheckOutcome run_lem_c_prop_2(const InstanceAnalysis& a) {
  const Lattice& lat = *a.lat;
  const std::uint32_t n = lat.size();
  bool triples = n <= 1024;
  std::string note = triples ? "families of size <= 3 plus the full family"
                             : "pair families plus the full family";
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i; j < n; ++j) {
      std::uint32_t jij = lat.join(i, j);
      Bitset lhs = a.var_c[i] & a.var_c[j];
      if (lhs != a.var_c[jij])
        return fail(Json{{"pair", Json::array({member_json(a, i), member_json(a, j)})}},
                    note);
      if (!triples) continue;
      for (std::uint32_t k = j; k < n; ++k)
        if (!Bitset::and_equals(lhs, a.var_c[k], a.var_c[lat.join(jij, k)]))
          return fail(Json{{"triple", Json::array({member_json(a, i), member_json(a, j),
                                                   member_json(a, k)})}},
                      note);
    }
  Bitset all(a.spec_c.size());
  for (std::uint32_t p = 0; p < a.spec_c.size(); ++p) all.set(p);
  std::uint32_t top = lat.zero_id();
  for (std::uint32_t i = 0; i < n; ++i) {
    all &= a.var_c[i];
    top = lat.join(top, i);
  }
  if (all != a.var_c[top]) return fail(Json{{"family", "all members"}}, note);
  return pass(note);
}

inline CheckOutcome run_lem_s_prop_3(const InstanceAnalysis& a) {
  const Lattice& lat = *a.lat;
  for (auto d1 : a.ring.divisors)
    for (auto d2 : a.ring.divisors) {
      if (d2 < d1) continue;
      std::uint32_t k1 = lat.annihilator_kernel(d1);
      std::uint32_t k2 = lat.annihilator_kernel(d2);
      Bitset lhs = a.var_s[k1] | a.var_s[k2];
      const Bitset& by_sum = a.var_s[lat.join(k1, k2)];
      const Bitset& by_meet_ideal =
          a.var_s[lat.annihilator_kernel(std::lcm(d1, d2))];
      const Bitset& by_product_ideal = a.var_s[lat.annihilator_kernel(
          std::gcd(d1 * d2, a.ring.modulus))];
      if (lhs != by_sum || lhs != by_meet_ideal || lhs != by_product_ideal)
        return fail(Json{{"divisors", Json::array({d1, d2})}});
    }
  return pass();
}

inline CheckOutcome run_lem_c_prop_3(const InstanceAnalysis& a) {
  const Lattice& lat = *a.lat;
  const std::uint32_t top = lat.top_id();
  for (auto d1 : a.ring.divisors)
    for (auto d2 : a.ring.divisors) {
      if (d2 < d1) continue;
      std::uint32_t m1 = lat.scaled(d1, top);
      std::uint32_t m2 = lat.scaled(d2, top);
      Bitset lhs = a.var_c[m1] | a.var_c[m2];
      const Bitset& by_meet = a.var_c[lat.meet(m1, m2)];
      const Bitset& by_meet_ideal = a.var_c[lat.scaled(std::lcm(d1, d2), top)];
      const Bitset& by_product_ideal =
          a.var_c[lat.scaled(std::gcd(d1 * d2, a.ring.modulus), top)];
      if (lhs != by_meet || lhs != by_meet_ideal || lhs != by_product_ideal)
        return fail(Json{{"divisors", Json::array({d1, d2})}});
    }
  return pass();
}

// --- section 4 statements ---------------------------------------------------

inline CheckOutcome run_thm_s_top_1(const InstanceAnalysis& a) {
  if (verify_axioms(a.z_s_c)) return pass();
  return fail(Json{{"space", kind_name(a.z_s_c.kind)}});
}

inline CheckOutcome run_thm_s_top_2(const InstanceAnalysis& a) {
  if (!a.spec_s_in_sh) return vacuous();
  if (a.top_s.is_topology) return pass();
  return fail(Json{{"witness", Json::array({member_json(a, a.top_s.witness->first),
                                            member_json(a, a.top_s.witness->second)})}});
}

inline CheckOutcome run_prop_com_prop(const InstanceAnalysis& a) {
  if (!a.preds.comultiplication) return vacuous();
  if (!a.spec_s_in_sh)
    return fail(Json{{"item", "second submodules strongly hollow"}});
  for (auto l : a.spec_s.members)
    if (!a.lat->completely_hollow(l))
      return fail(Json{{"item", "completely hollow"}, {"second", member_json(a, l)}});
  if (!a.top_s.is_topology) return fail(Json{{"item", "variety family union-closed"}});
  if (!a.preds.min_property) return fail(Json{{"item", "min-property"}});
  return pass();
}

inline CheckOutcome run_lem_closure_s(const InstanceAnalysis& a) {
  if (!a.top_s.is_topology) return vacuous();
  std::string note;
  auto pool = subset_pool(a, a.spec_s.size(), "closure-s", 0, note);
  for (const auto& sub : pool) {
    Bitset topo = closure(*a.z_s, sub);
    const Bitset& alg = a.var_s[sum_of_points(*a.lat, a.spec_s, sub)];
    if (topo != alg)
      return fail(Json{{"subset", subset_json(a, a.spec_s, sub)}}, note);
  }
  return pass(note);
}

inline CheckOutcome run_thm_11(const InstanceAnalysis& a) {
  if (!a.top_s.is_topology) return vacuous();
  const Lattice& lat = *a.lat;
  auto corad = coradical_vector(a);
  std::vector<std::uint32_t> fixed;
  for (std::uint32_t i = 0; i < lat.size(); ++i)
    if (corad[i] == i) fixed.push_back(i);
  // Into the closed family, injectively, preserving order both ways.
  for (auto l : fixed)
    if (!a.z_s->is_closed(a.var_s[l]))
      return fail(Json{{"coradical_member", member_json(a, l)}});
  for (auto l1 : fixed)
    for (auto l2 : fixed) {
      bool ord = lat.leq(l1, l2);
      bool img = a.var_s[l1].is_subset_of(a.var_s[l2]);
      if (ord != img)
        return fail(Json{{"pair", Json::array({member_json(a, l1), member_json(a, l2)})}});
    }
  // Onto: every closed set is hit, with the point sum as inverse.
  for (const auto& c : a.z_s->closed) {
    std::uint32_t h = sum_of_points(lat, a.spec_s, c);
    if (corad[h] != h || a.var_s[h] != c)
      return fail(Json{{"closed_set", subset_json(a, a.spec_s, c)}});
  }
  return pass();
}

inline CheckOutcome run_prop_duo_irr(const InstanceAnalysis& a) {
  if (!a.top_s.is_topology) return vacuous();
  std::string note;
  auto pool = subset_pool(a, a.spec_s.size(), "duo-irr", 1, note);
  for (const auto& sub : pool) {
    bool irr = is_irreducible_subset(*a.z_s, sub);
    std::uint32_t h = sum_of_points(*a.lat, a.spec_s, sub);
    bool second = a.spec_s.member_set.test(h);
    if (irr && !second)
      return fail(Json{{"subset", subset_json(a, a.spec_s, sub)},
                       {"sum", member_json(a, h)}},
                  note);
    if (a.spec_s_in_sh) {
      bool sh = h != a.zero_id() && a.lat->strongly_hollow(h);
      if (irr != second || second != sh)
        return fail(Json{{"subset", subset_json(a, a.spec_s, sub)},
                         {"irreducible", irr},
                         {"sum_second", second},
                         {"sum_strongly_hollow", sh}},
                    note);
    }
  }
  return pass(note);
}

inline CheckOutcome run_thm_corad_s(const InstanceAnalysis& a) {
  if (!a.top_s.is_topology) return vacuous();
  const Lattice& lat = *a.lat;
  const FiniteSpace& sp = *a.z_s;
  Bitset full = sp.full_set();
  Bitset soc_pos = positions_of(a.spec_s, lat.simples());
  std::uint32_t corad_m = coradical_second(lat, a.spec_s, lat.top_id());
  std::uint32_t socle = lat.socle_id();
  bool spec_irr = is_irreducible_subset(sp, full);
  bool soc_irr = is_irreducible_subset(sp, soc_pos);
  bool corad_second = a.spec_s.member_set.test(corad_m);
  bool socle_second = a.spec_s.member_set.test(socle);
  if (spec_irr && !corad_second) return fail(Json{{"item", "coradical second"}});
  if (soc_irr && !socle_second) return fail(Json{{"item", "socle second"}});
  if (a.spec_s_in_sh) {
    bool corad_sh = corad_m != a.zero_id() && lat.strongly_hollow(corad_m);
    bool soc_sh = socle != a.zero_id() && lat.strongly_hollow(socle);
    if (spec_irr != corad_second || corad_second != corad_sh)
      return fail(Json{{"item", "coradical equivalences"},
                       {"spectrum_irreducible", spec_irr},
                       {"coradical_second", corad_second},
                       {"coradical_strongly_hollow", corad_sh}});
    if (soc_irr != socle_second || socle_second != soc_sh)
      return fail(Json{{"item", "socle equivalences"},
                       {"simples_irreducible", soc_irr},
                       {"socle_second", socle_second},
                       {"socle_strongly_hollow", soc_sh}});
  }
  return pass();
}

inline CheckOutcome run_prop_max_irr(const InstanceAnalysis& a) {
  if (!a.spec_s_in_sh) return vacuous();
  if (!a.top_s.is_topology)
    return fail(Json{{"item", "strongly hollow spectrum must be a topology"}});
  const Lattice& lat = *a.lat;
  std::vector<Bitset> irr = irreducible_closed_sets(*a.z_s);
  auto is_irr_closed = [&](const Bitset& c) {
    for (const auto& x : irr)
      if (x == c) return true;
    return false;
  };
  for (auto k : a.spec_s.members) {
    if (!is_irr_closed(a.var_s[k]))
      return fail(Json{{"second", member_json(a, k)},
                       {"item", "variety not irreducible closed"}});
    if (sum_of_points(lat, a.spec_s, a.var_s[k]) != k)
      return fail(Json{{"second", member_json(a, k)},
                       {"item", "point sum does not recover the member"}});
  }
  for (const auto& c : irr) {
    std::uint32_t h = sum_of_points(lat, a.spec_s, c);
    if (!a.spec_s.member_set.test(h) || a.var_s[h] != c)
      return fail(Json{{"closed_set", subset_json(a, a.spec_s, c)},
                       {"item", "irreducible closed set is not a variety of a second"}});
  }
  std::vector<Bitset> comps = irreducible_components(*a.z_s);
  auto in_comps = [&](const Bitset& c) {
    for (const auto& x : comps)
      if (x == c) return true;
    return false;
  };
  std::size_t max_count = 0;
  for (auto k : a.spec_s.members) {
    bool maximal = true;
    for (auto k2 : a.spec_s.members)
      if (k2 != k && lat.leq(k, k2)) maximal = false;
    if (!maximal) continue;
    ++max_count;
    if (!in_comps(a.var_s[k]))
      return fail(Json{{"second", member_json(a, k)},
                       {"item", "maximal second not an irreducible component"}});
  }
  if (max_count != comps.size())
    return fail(Json{{"item", "component count mismatch"},
                     {"maximal_seconds", max_count},
                     {"components", comps.size()}});
  return pass();
}

inline CheckOutcome run_cor_sober_s(const InstanceAnalysis& a) {
  if (!a.spec_s_in_sh) return vacuous();
  if (!a.top_s.is_topology || !is_sober(*a.z_s)) return fail(Json{{"sober", false}});
  return pass();
}

inline CheckOutcome run_prop_uniform(const InstanceAnalysis& a) {
  if (!a.top_s.is_topology) return vacuous();
  if (!a.preds.atomic) return fail(Json{{"item", "finite module must be atomic"}});
  TopologicalProperties p = topological_properties(*a.z_s);
  if (a.preds.uniform == p.ultraconnected) return pass();
  return fail(Json{{"uniform", a.preds.uniform},
                   {"ultraconnected", p.ultraconnected}});
}

inline CheckOutcome run_prop_it_irr(const InstanceAnalysis& a) {
  if (!a.top_s.is_topology || !a.all_second_simple) return vacuous();
  TopologicalProperties p = topological_properties(*a.z_s);
  if (a.preds.min_property && !p.discrete)
    return fail(Json{{"item", "min-property must force a discrete spectrum"}});
  bool unique_simple = a.lat->simples().count() == 1;
  if (unique_simple != (a.preds.min_property && p.connected))
    return fail(Json{{"unique_simple", unique_simple},
                     {"min_property", a.preds.min_property},
                     {"connected", p.connected}});
  return pass();
}

inline CheckOutcome run_thm_colocal(const InstanceAnalysis& a) {
  if (!a.all_second_simple || !a.spec_s_in_sh) return vacuous();
  if (!a.top_s.is_topology)
    return fail(Json{{"item", "hypotheses must force a topology"}});
  TopologicalProperties p = topological_properties(*a.z_s);
  if (a.preds.colocal == p.connected) return pass();
  return fail(Json{{"colocal", a.preds.colocal}, {"connected", p.connected}});
}

inline CheckOutcome run_lem_1n(const InstanceAnalysis& a) {
  if (!a.spec_s_in_sh) return vacuous();
  if (!a.top_s.is_topology)
    return fail(Json{{"item", "strongly hollow spectrum must be a topology"}});
  std::string note;
  auto pool = subset_pool(a, a.spec_s.size(), "conn-s", 2, note);
  for (const auto& sub : pool) {
    if (!is_connected_subset(*a.z_s, sub)) continue;
    bool ok = true;
    sub.for_each([&](std::size_t i) {
      bool comparable = false;
      sub.for_each([&](std::size_t j) {
        if (i == j) return;
        std::uint32_t mi = a.spec_s.members[i], mj = a.spec_s.members[j];
        if (a.lat->leq(mi, mj) || a.lat->leq(mj, mi)) comparable = true;
      });
      if (!comparable) ok = false;
    });
    if (!ok) return fail(Json{{"subset", subset_json(a, a.spec_s, sub)}}, note);
  }
  return pass(note);
}

inline CheckOutcome run_lem_s_t1(const InstanceAnalysis& a) {
  if (!a.top_s.is_topology) return vacuous();
  const Lattice& lat = *a.lat;
  for (std::uint32_t l = 0; l < lat.size(); ++l) {
    bool simple = lat.simples().test(l);
    bool in_spec = a.spec_s.member_set.test(l);
    bool singleton_variety = in_spec && a.var_s[l].count() == 1 &&
                             a.var_s[l].test(a.spec_s.pos_of[l]);
    bool singleton_closed = false;
    if (in_spec) {
      Bitset single(a.spec_s.size());
      single.set(a.spec_s.pos_of[l]);
      singleton_closed = a.z_s->is_closed(single);
    }
    if (simple != singleton_variety || singleton_variety != singleton_closed)
      return fail(Json{{"submodule", member_json(a, l)},
                       {"simple", simple},
                       {"variety_is_singleton", singleton_variety},
                       {"singleton_closed", singleton_closed}});
  }
  return pass();
}

inline CheckOutcome run_prop_t1(const InstanceAnalysis& a) {
  if (!a.top_s.is_topology) return vacuous();
  bool all_simple = a.spec_s.member_set == a.lat->simples();
  TopologicalProperties p = topological_properties(*a.z_s);
  if (all_simple == p.t1) return pass();
  return fail(Json{{"spectrum_is_simples", all_simple}, {"t1", p.t1}});
}

inline CheckOutcome run_thm_t2(const InstanceAnalysis& a) {
  if (!a.top_s.is_topology || !a.preds.min_property) return vacuous();
  TopologicalProperties p = topological_properties(*a.z_s);
  bool c1 = a.spec_s.member_set == a.lat->simples();
  if (c1 == p.discrete && p.discrete == p.t2 && p.t2 == p.t1) return pass();
  return fail(Json{{"spectrum_is_simples", c1},
                   {"discrete", p.discrete},
                   {"t2", p.t2},
                   {"t1", p.t1}});
}

inline CheckOutcome run_rem_s_strong(const InstanceAnalysis& a) {
  if (!a.preds.uniserial) return vacuous();
  for (std::uint32_t l = 1; l < a.lat->size(); ++l)
    if (!a.lat->strongly_hollow(l)) return fail(Json{{"submodule", member_json(a, l)}});
  return pass();
}

// Pointwise characterizations on the second-spectrum topology: T0,
// covarieties as a basis, singleton closures, and the empty-variety tests.
inline CheckOutcome run_rem_simple_char(const InstanceAnalysis& a) {
  if (!a.top_s.is_topology) return vacuous();
  const Lattice& lat = *a.lat;
  const FiniteSpace& sp = *a.z_s;
  if (!topological_properties(sp).t0) return fail(Json{{"item", "t0"}});

  // Every open set is a union of covarieties of (finitely generated, i.e.
  // all) submodules contained in it.
  if (a.spec_s_in_sh) {
    Bitset full = sp.full_set();
    for (const auto& c : sp.closed) {
      Bitset open = full;
      open.and_not(c);
      Bitset built(sp.point_count());
      for (std::uint32_t l = 0; l < lat.size(); ++l) {
        Bitset x = covariety(a.var_s[l], a.spec_s.size());
        if (x.is_subset_of(open)) built |= x;
      }
      if (built != open) return fail(Json{{"item", "basis"}});
    }
  }

  for (auto l : a.spec_s.members) {
    Bitset single(a.spec_s.size());
    single.set(a.spec_s.pos_of[l]);
    if (closure(sp, single) != a.var_s[l])
      return fail(Json{{"item", "singleton closure"}, {"point", member_json(a, l)}});
  }

  std::uint32_t socle = lat.socle_id();
  for (std::uint32_t l = 0; l < lat.size(); ++l) {
    bool covariety_empty = a.var_s[l].count() == a.spec_s.size();
    if (covariety_empty && !lat.leq(socle, l))
      return fail(Json{{"item", "socle bound"}, {"member", member_json(a, l)}});
    if (a.all_second_simple && lat.leq(socle, l) && !covariety_empty)
      return fail(Json{{"item", "socle bound converse"}, {"member", member_json(a, l)}});
    if (a.var_s[l].none() != (l == lat.zero_id()))
      return fail(Json{{"item", "empty variety"}, {"member", member_json(a, l)}});
  }
  return pass();
}

// Dual characterizations on the coprime-spectrum topology, with the basis of
// covarieties of cyclic submodules.
inline CheckOutcome run_rem_max_char(const InstanceAnalysis& a) {
  if (!a.top_c.is_topology) return vacuous();
  const Lattice& lat = *a.lat;
  const FiniteSpace& sp = *a.z_c;
  if (!topological_properties(sp).t0) return fail(Json{{"item", "t0"}});

  std::vector<std::uint32_t> cyclic_ids;
  {
    Bitset seen(lat.size());
    for (std::uint32_t e = 0; e < lat.module().size(); ++e)
      seen.set(lat.index_of(
          cyclic_subgroup(lat.module(), static_cast<FiniteModule::Elt>(e))));
    cyclic_ids = seen.to_list();
  }
  Bitset full = sp.full_set();
  for (const auto& c : sp.closed) {
    Bitset open = full;
    open.and_not(c);
    Bitset built(sp.point_count());
    for (auto l : cyclic_ids) {
      Bitset x = covariety(a.var_c[l], a.spec_c.size());
      if (x.is_subset_of(open)) built |= x;
    }
    if (built != open) return fail(Json{{"item", "cyclic basis"}});
  }

  for (auto k : a.spec_c.members) {
    Bitset single(a.spec_c.size());
    single.set(a.spec_c.pos_of[k]);
    if (closure(sp, single) != a.var_c[k])
      return fail(Json{{"item", "singleton closure"}, {"point", member_json(a, k)}});
  }

  std::uint32_t radical = lat.radical_id();
  for (std::uint32_t l = 0; l < lat.size(); ++l) {
    bool covariety_empty = a.var_c[l].count() == a.spec_c.size();
    if (covariety_empty && !lat.leq(l, radical))
      return fail(Json{{"item", "radical bound"}, {"member", member_json(a, l)}});
    if (a.all_coprime_maximal && lat.leq(l, radical) && !covariety_empty)
      return fail(Json{{"item", "radical bound converse"}, {"member", member_json(a, l)}});
    if (a.var_c[l].none() != (l == lat.top_id()))
      return fail(Json{{"item", "empty variety"}, {"member", member_json(a, l)}});
  }
  return pass();
}

inline CheckOutcome run_rem_corad_2(const InstanceAnalysis& a) {
  const Lattice& lat = *a.lat;
  auto corad = coradical_vector(a);
  for (std::uint32_t i = 0; i < lat.size(); ++i) {
    if (corad[corad[i]] != corad[i])
      return fail(Json{{"submodule", member_json(a, i)}, {"item", "idempotence"}});
    bool mono = true;
    lat.above(i).for_each([&](std::size_t j) {
      if (!lat.leq(corad[i], corad[static_cast<std::uint32_t>(j)])) mono = false;
    });
    if (!mono)
      return fail(Json{{"submodule", member_json(a, i)}, {"item", "monotonicity"}});
  }
  return pass();
}

// --- section 5 statements ---------------------------------------------------

inline CheckOutcome run_thm_c_top_1(const InstanceAnalysis& a) {
  if (verify_axioms(a.z_c_m)) return pass();
  return fail(Json{{"space", kind_name(a.z_c_m.kind)}});
}

inline CheckOutcome run_thm_c_top_2(const InstanceAnalysis& a) {
  if (!a.spec_c_in_si) return vacuous();
  if (a.top_c.is_topology) return pass();
  return fail(Json{{"witness", Json::array({member_json(a, a.top_c.witness->first),
                                            member_json(a, a.top_c.witness->second)})}});
}

inline CheckOutcome run_prop_mul_prop(const InstanceAnalysis& a) {
  if (!a.preds.multiplication) return vacuous();
  if (!a.spec_c_in_si)
    return fail(Json{{"item", "coprime submodules strongly irreducible"}});
  for (auto k : a.spec_c.members)
    if (!a.lat->completely_irreducible(k))
      return fail(Json{{"item", "completely irreducible"}, {"coprime", member_json(a, k)}});
  if (!a.top_c.is_topology) return fail(Json{{"item", "variety family union-closed"}});
  if (!a.preds.max_property) return fail(Json{{"item", "max-property"}});
  return pass();
}

inline CheckOutcome run_lem_closure_c(const InstanceAnalysis& a) {
  if (!a.top_c.is_topology) return vacuous();
  std::string note;
  auto pool = subset_pool(a, a.spec_c.size(), "closure-c", 0, note);
  for (const auto& sub : pool) {
    Bitset topo = closure(*a.z_c, sub);
    const Bitset& alg = a.var_c[intersection_of_points(*a.lat, a.spec_c, sub)];
    if (topo != alg)
      return fail(Json{{"subset", subset_json(a, a.spec_c, sub)}}, note);
  }
  return pass(note);
}

inline CheckOutcome run_thm_c_11(const InstanceAnalysis& a) {
  if (!a.top_c.is_topology) return vacuous();
  const Lattice& lat = *a.lat;
  auto rad = radical_vector(a);
  std::vector<std::uint32_t> fixed;
  for (std::uint32_t i = 0; i < lat.size(); ++i)
    if (rad[i] == i) fixed.push_back(i);
  for (auto l : fixed)
    if (!a.z_c->is_closed(a.var_c[l]))
      return fail(Json{{"radical_member", member_json(a, l)}});
  for (auto l1 : fixed)
    for (auto l2 : fixed) {
      bool ord = lat.leq(l1, l2);
      bool img = a.var_c[l2].is_subset_of(a.var_c[l1]);  // order-reversing
      if (ord != img)
        return fail(Json{{"pair", Json::array({member_json(a, l1), member_json(a, l2)})}});
    }
  for (const auto& c : a.z_c->closed) {
    std::uint32_t j = intersection_of_points(lat, a.spec_c, c);
    if (rad[j] != j || a.var_c[j] != c)
      return fail(Json{{"closed_set", subset_json(a, a.spec_c, c)}});
  }
  return pass();
}

inline CheckOutcome run_prop_c_irr(const InstanceAnalysis& a) {
  if (!a.top_c.is_topology || !a.preds.completely_distributive) return vacuous();
  std::string note;
  auto pool = subset_pool(a, a.spec_c.size(), "c-irr", 1, note);
  for (const auto& sub : pool) {
    bool irr = is_irreducible_subset(*a.z_c, sub);
    std::uint32_t j = intersection_of_points(*a.lat, a.spec_c, sub);
    bool coprime = a.spec_c.member_set.test(j);
    if (irr && !coprime)
      return fail(Json{{"subset", subset_json(a, a.spec_c, sub)},
                       {"intersection", member_json(a, j)}},
                  note);
    if (a.spec_c_in_si) {
      bool si = j != a.top_id() && a.lat->strongly_irreducible(j);
      if (irr != coprime || coprime != si)
        return fail(Json{{"subset", subset_json(a, a.spec_c, sub)},
                         {"irreducible", irr},
                         {"intersection_coprime", coprime},
                         {"intersection_strongly_irreducible", si}},
                    note);
    }
  }
  return pass(note);
}

inline CheckOutcome run_thm_corad_c(const InstanceAnalysis& a) {
  if (!a.top_c.is_topology || !a.preds.completely_distributive) return vacuous();
  const Lattice& lat = *a.lat;
  const FiniteSpace& sp = *a.z_c;
  Bitset full = sp.full_set();
  Bitset max_pos = positions_of(a.spec_c, lat.maximals());
  std::uint32_t rad_full = radical_coprime(lat, a.spec_c, lat.zero_id());
  std::uint32_t rad_classical = lat.radical_id();
  bool spec_irr = is_irreducible_subset(sp, full);
  bool max_irr = is_irreducible_subset(sp, max_pos);
  bool rad_coprime = a.spec_c.member_set.test(rad_full);
  bool classical_coprime = a.spec_c.member_set.test(rad_classical);
  if (spec_irr && !rad_coprime) return fail(Json{{"item", "radical coprime"}});
  if (max_irr && !classical_coprime)
    return fail(Json{{"item", "classical radical coprime"}});
  if (a.spec_c_in_si) {
    bool rad_si = rad_full != a.top_id() && lat.strongly_irreducible(rad_full);
    bool cls_si =
        rad_classical != a.top_id() && lat.strongly_irreducible(rad_classical);
    if (spec_irr != rad_coprime || rad_coprime != rad_si)
      return fail(Json{{"item", "radical equivalences"},
                       {"spectrum_irreducible", spec_irr},
                       {"radical_coprime", rad_coprime},
                       {"radical_strongly_irreducible", rad_si}});
    if (max_irr != classical_coprime || classical_coprime != cls_si)
      return fail(Json{{"item", "classical radical equivalences"},
                       {"maximals_irreducible", max_irr},
                       {"radical_coprime", classical_coprime},
                       {"radical_strongly_irreducible", cls_si}});
  }
  return pass();
}

inline CheckOutcome run_prop_c_max_irr(const InstanceAnalysis& a) {
  if (!a.preds.completely_distributive || !a.spec_c_in_si) return vacuous();
  if (!a.top_c.is_topology)
    return fail(Json{{"item", "strongly irreducible spectrum must be a topology"}});
  const Lattice& lat = *a.lat;
  std::vector<Bitset> irr = irreducible_closed_sets(*a.z_c);
  auto is_irr_closed = [&](const Bitset& c) {
    for (const auto& x : irr)
      if (x == c) return true;
    return false;
  };
  for (auto k : a.spec_c.members) {
    if (!is_irr_closed(a.var_c[k]))
      return fail(Json{{"coprime", member_json(a, k)},
                       {"item", "variety not irreducible closed"}});
    if (intersection_of_points(lat, a.spec_c, a.var_c[k]) != k)
      return fail(Json{{"coprime", member_json(a, k)},
                       {"item", "point intersection does not recover the member"}});
  }
  for (const auto& c : irr) {
    std::uint32_t j = intersection_of_points(lat, a.spec_c, c);
    if (!a.spec_c.member_set.test(j) || a.var_c[j] != c)
      return fail(Json{{"closed_set", subset_json(a, a.spec_c, c)},
                       {"item", "irreducible closed set is not a variety of a coprime"}});
  }
  std::vector<Bitset> comps = irreducible_components(*a.z_c);
  auto in_comps = [&](const Bitset& c) {
    for (const auto& x : comps)
      if (x == c) return true;
    return false;
  };
  std::size_t min_count = 0;
  for (auto k : a.spec_c.members) {
    bool minimal = true;
    for (auto k2 : a.spec_c.members)
      if (k2 != k && lat.leq(k2, k)) minimal = false;
    if (!minimal) continue;
    ++min_count;
    if (!in_comps(a.var_c[k]))
      return fail(Json{{"coprime", member_json(a, k)},
                       {"item", "minimal coprime not an irreducible component"}});
  }
  if (min_count != comps.size())
    return fail(Json{{"item", "component count mismatch"},
                     {"minimal_coprimes", min_count},
                     {"components", comps.size()}});
  return pass();
}

inline CheckOutcome run_cor_sober_c(const InstanceAnalysis& a) {
  if (!a.preds.completely_distributive || !a.spec_c_in_si) return vacuous();
  if (!a.top_c.is_topology || !is_sober(*a.z_c)) return fail(Json{{"sober", false}});
  return pass();
}

inline CheckOutcome run_thm_c_hollow(const InstanceAnalysis& a) {
  if (!a.top_c.is_topology) return vacuous();
  if (!a.preds.coatomic) return fail(Json{{"item", "finite module must be coatomic"}});
  TopologicalProperties p = topological_properties(*a.z_c);
  if (a.preds.hollow == p.ultraconnected) return pass();
  return fail(Json{{"hollow", a.preds.hollow},
                   {"ultraconnected", p.ultraconnected}});
}

inline CheckOutcome run_prop_irr_c(const InstanceAnalysis& a) {
  if (!a.top_c.is_topology || !a.all_coprime_maximal) return vacuous();
  TopologicalProperties p = topological_properties(*a.z_c);
  if (a.preds.complete_max_property && !p.discrete)
    return fail(Json{{"item", "complete max-property must force a discrete spectrum"}});
  bool unique_maximal = a.lat->maximals().count() == 1;
  if (unique_maximal != (a.preds.complete_max_property && p.connected))
    return fail(Json{{"unique_maximal", unique_maximal},
                     {"complete_max_property", a.preds.complete_max_property},
                     {"connected", p.connected}});
  return pass();
}

inline CheckOutcome run_thm_c_colocal(const InstanceAnalysis& a) {
  if (!a.top_c.is_topology || !a.preds.complete_max_property ||
      !a.all_coprime_maximal)
    return vacuous();
  TopologicalProperties p = topological_properties(*a.z_c);
  if (a.preds.local == p.connected) return pass();
  return fail(Json{{"local", a.preds.local}, {"connected", p.connected}});
}

inline CheckOutcome run_lem_c_1n(const InstanceAnalysis& a) {
  if (!a.spec_c_in_si) return vacuous();
  if (!a.top_c.is_topology)
    return fail(Json{{"item", "strongly irreducible spectrum must be a topology"}});
  std::string note;
  auto pool = subset_pool(a, a.spec_c.size(), "conn-c", 2, note);
  for (const auto& sub : pool) {
    if (!is_connected_subset(*a.z_c, sub)) continue;
    bool ok = true;
    sub.for_each([&](std::size_t i) {
      bool comparable = false;
      sub.for_each([&](std::size_t j) {
        if (i == j) return;
        std::uint32_t mi = a.spec_c.members[i], mj = a.spec_c.members[j];
        if (a.lat->leq(mi, mj) || a.lat->leq(mj, mi)) comparable = true;
      });
      if (!comparable) ok = false;
    });
    if (!ok) return fail(Json{{"subset", subset_json(a, a.spec_c, sub)}}, note);
  }
  return pass(note);
}

inline CheckOutcome run_prop_c_pts(const InstanceAnalysis& a) {
  if (!a.top_c.is_topology) return vacuous();
  const Lattice& lat = *a.lat;
  for (std::uint32_t l = 0; l < lat.size(); ++l) {
    bool maximal = lat.maximals().test(l);
    bool in_spec = a.spec_c.member_set.test(l);
    bool singleton_variety = in_spec && a.var_c[l].count() == 1 &&
                             a.var_c[l].test(a.spec_c.pos_of[l]);
    bool singleton_closed = false;
    if (in_spec) {
      Bitset single(a.spec_c.size());
      single.set(a.spec_c.pos_of[l]);
      singleton_closed = a.z_c->is_closed(single);
    }
    if (maximal != singleton_variety || singleton_variety != singleton_closed)
      return fail(Json{{"submodule", member_json(a, l)},
                       {"maximal", maximal},
                       {"variety_is_singleton", singleton_variety},
                       {"singleton_closed", singleton_closed}});
  }
  return pass();
}

inline CheckOutcome run_prop_c_t1(const InstanceAnalysis& a) {
  if (!a.top_c.is_topology) return vacuous();
  bool all_maximal = a.spec_c.member_set == a.lat->maximals();
  TopologicalProperties p = topological_properties(*a.z_c);
  if (all_maximal == p.t1) return pass();
  return fail(Json{{"spectrum_is_maximals", all_maximal}, {"t1", p.t1}});
}

inline CheckOutcome run_thm_c_t2(const InstanceAnalysis& a) {
  if (!a.top_c.is_topology || !a.preds.complete_max_property) return vacuous();
  TopologicalProperties p = topological_properties(*a.z_c);
  bool c1 = a.spec_c.member_set == a.lat->maximals();
  if (c1 == p.discrete && p.discrete == p.t2 && p.t2 == p.t1) return pass();
  return fail(Json{{"spectrum_is_maximals", c1},
                   {"discrete", p.discrete},
                   {"t2", p.t2},
                   {"t1", p.t1}});
}

inline CheckOutcome run_ex_strong(const InstanceAnalysis& a) {
  if (!a.preds.uniserial) return vacuous();
  for (std::uint32_t l = 0; l + 1 < a.lat->size(); ++l)
    if (!a.lat->strongly_irreducible(l))
      return fail(Json{{"submodule", member_json(a, l)}});
  return pass();
}

inline CheckOutcome run_rem_rad_2(const InstanceAnalysis& a) {
  const Lattice& lat = *a.lat;
  auto rad = radical_vector(a);
  for (std::uint32_t i = 0; i < lat.size(); ++i) {
    if (rad[rad[i]] != rad[i])
      return fail(Json{{"submodule", member_json(a, i)}, {"item", "idempotence"}});
    bool mono = true;
    lat.above(i).for_each([&](std::size_t j) {
      if (!lat.leq(rad[i], rad[static_cast<std::uint32_t>(j)])) mono = false;
    });
    if (!mono)
      return fail(Json{{"submodule", member_json(a, i)}, {"item", "monotonicity"}});
  }
  return pass();
}

}  // namespace checks

inline const std::vector<CheckDescriptor>& check_catalog() {
  static const std::vector<CheckDescriptor> catalog = [] {
    using namespace checks;
    std::vector<CheckDescriptor> c;
    auto add = [&](const char* id, const char* statement,
                   CheckOutcome (*fn)(const InstanceAnalysis&),
                   const char* unattainable = "") {
      c.push_back({id, statement, {}, unattainable, fn});
    };

    add("prop-IM",
        "coprimality of M, constancy of annihilators over proper quotients, "
        "and every proper submodule being coprime in M are equivalent",
        run_prop_im);
    add("prop-IM+K",
        "K coprime in M, all overmodules of K coprime in M, and all quotients "
        "above K coprime modules are equivalent",
        run_prop_im_k);
    add("prop-c-exact",
        "a coprime K passes to K∩L in L or to (K+L)/L in M/L for every "
        "intermediate L",
        run_prop_c_exact);
    add("lem-cop-prime",
        "annihilators of second submodules and colon ideals of coprime "
        "submodules are prime",
        run_lem_cop_prime);
    add("prop-c-ann-1",
        "a multiplication module is coprime exactly when it is simple",
        run_prop_c_ann_1);
    add("prop-c-ann-2",
        "a comultiplication module is coprime exactly when its annihilator is "
        "prime",
        run_prop_c_ann_2);
    add("cor-mult-comult",
        "for multiplication comultiplication modules: coprime, prime "
        "annihilator, and simple coincide",
        run_cor_mult_comult);
    add("cor-com-s",
        "for comultiplication modules the second spectrum is the "
        "prime-annihilator submodules and equals the simple submodules",
        run_cor_com_s);
    add("cor-r-s-c",
        "for the ring as a module: coprime spectrum = maximal ideals, second "
        "spectrum = minimal ideals",
        run_cor_r_s_c);
    add("rem-gen-ass",
        "for comultiplication modules the second spectrum bijects with the "
        "generalized associated primes",
        run_rem_gen_ass);
    add("lem-coprime-div",
        "K is coprime in M exactly when its colon ideal is prime and M/K is "
        "divisible over the quotient ring",
        run_lem_coprime_div);
    add("prop-div-2",
        "a coprime submodule below a relatively divisible L stays coprime in L",
        run_prop_div_2);
    add("prop-sum-cop",
        "coprime direct sums have coprime summands; with equal annihilators "
        "the converse holds",
        run_prop_sum_cop);
    add("prop-sum-less",
        "a direct sum of coprimeless modules is coprimeless",
        run_prop_sum_less,
        "finite non-zero modules always have maximal submodules, so no "
        "summand is ever coprimeless");
    add("ex-acc",
        "some prime p with pM proper makes pM coprime in M, so the coprime "
        "spectrum is nonempty",
        run_ex_acc);
    add("lem-s-max",
        "over a comultiplication module every nonzero L has a second "
        "submodule maximal under it",
        run_lem_s_max);
    add("lem-s-prop-2",
        "intersections of second varieties collapse along member "
        "intersections, over bounded and full families",
        run_lem_s_prop_2);
    add("lem-c-prop-2",
        "intersections of coprime varieties collapse along member sums, over "
        "bounded and full families",
        run_lem_c_prop_2);
    add("lem-s-prop-3",
        "unions of varieties of annihilator kernels collapse along sums, "
        "ideal intersections and ideal products",
        run_lem_s_prop_3);
    add("lem-c-prop-3",
        "unions of varieties of ideal multiples collapse along intersections "
        "and ideal products",
        run_lem_c_prop_3);
    add("thm-s-top-1",
        "the annihilator-kernel variety family is always a topology on the "
        "second spectrum",
        run_thm_s_top_1);
    add("thm-s-top-2",
        "a strongly hollow second spectrum makes the full variety family a "
        "topology",
        run_thm_s_top_2);
    add("thm-c-top-1",
        "the ideal-multiple variety family is always a topology on the "
        "coprime spectrum",
        run_thm_c_top_1);
    add("thm-c-top-2",
        "a strongly irreducible coprime spectrum makes the full variety "
        "family a topology",
        run_thm_c_top_2);
    add("prop-com-prop",
        "comultiplication modules have strongly hollow seconds, completely "
        "hollow seconds, a second-spectrum topology, and the min-property",
        run_prop_com_prop);
    add("prop-mul-prop",
        "multiplication modules have strongly irreducible coprimes, "
        "completely irreducible coprimes, a coprime-spectrum topology, and "
        "the max-property",
        run_prop_mul_prop);
    add("lem-closure-s",
        "closure in the second-spectrum topology is the variety of the point "
        "sum",
        run_lem_closure_s);
    add("lem-closure-c",
        "closure in the coprime-spectrum topology is the variety of the "
        "point intersection",
        run_lem_closure_c);
    add("thm-11",
        "coradical-fixed submodules biject order-preservingly with closed "
        "sets of the second spectrum",
        run_thm_11);
    add("thm-c-11",
        "radical-fixed submodules biject order-reversingly with closed sets "
        "of the coprime spectrum",
        run_thm_c_11);
    add("prop-duo-irr",
        "irreducible subsets of the second spectrum have second point sums; "
        "under strong hollowness the converse equivalences hold",
        run_prop_duo_irr);
    add("prop-c-irr",
        "irreducible subsets of the coprime spectrum have coprime point "
        "intersections; under strong irreducibility the equivalences hold",
        run_prop_c_irr);
    add("thm-corad-s",
        "an irreducible second spectrum has a second coradical; dually for "
        "the simple locus and the socle",
        run_thm_corad_s);
    add("thm-corad-c",
        "an irreducible coprime spectrum has a coprime radical; dually for "
        "the maximal locus and the classical radical",
        run_thm_corad_c);
    add("prop-max-irr",
        "seconds biject with irreducible closed sets; maximal seconds with "
        "irreducible components",
        run_prop_max_irr);
    add("prop-c-max-irr",
        "coprimes biject with irreducible closed sets; minimal coprimes with "
        "irreducible components",
        run_prop_c_max_irr);
    add("cor-sober-s",
        "a strongly hollow second spectrum is sober",
        run_cor_sober_s);
    add("cor-sober-c",
        "a strongly irreducible coprime spectrum over a completely "
        "distributive module is sober",
        run_cor_sober_c);
    add("prop-uniform",
        "uniform modules are exactly the ones with ultraconnected second "
        "spectrum",
        run_prop_uniform);
    add("thm-c-hollow",
        "hollow modules are exactly the ones with ultraconnected coprime "
        "spectrum",
        run_thm_c_hollow);
    add("prop-it-irr",
        "with all seconds simple: min-property forces a discrete spectrum, "
        "and a unique simple is equivalent to min-property plus connectivity",
        run_prop_it_irr);
    add("prop-irr-c",
        "with all coprimes maximal: the complete max-property forces a "
        "discrete spectrum, and a unique maximal is equivalent to it plus "
        "connectivity",
        run_prop_irr_c);
    add("thm-colocal",
        "when the seconds are the simples and strongly hollow, colocal "
        "equals connected second spectrum",
        run_thm_colocal);
    add("thm-c-colocal",
        "under the complete max-property with all coprimes maximal, local "
        "equals connected coprime spectrum",
        run_thm_c_colocal);
    add("lem-1n",
        "in a connected finite subset of a strongly hollow second spectrum "
        "every member is comparable to another",
        run_lem_1n);
    add("lem-c-1n",
        "in a connected finite subset of a strongly irreducible coprime "
        "spectrum every member is comparable to another",
        run_lem_c_1n);
    add("lem-s-t1",
        "simple, second with singleton variety, and closed singleton "
        "coincide pointwise on the second spectrum",
        run_lem_s_t1);
    add("prop-c-pts",
        "maximal, coprime with singleton variety, and closed singleton "
        "coincide pointwise on the coprime spectrum",
        run_prop_c_pts);
    add("prop-T1",
        "the second spectrum is T1 exactly when it consists of the simples",
        run_prop_t1);
    add("prop-c-T1",
        "the coprime spectrum is T1 exactly when it consists of the maximals",
        run_prop_c_t1);
    add("thm-T2",
        "under the min-property: simples-only spectrum, discrete, T2 and T1 "
        "are equivalent for the second spectrum",
        run_thm_t2);
    add("thm-c-T2",
        "under the complete max-property: maximals-only spectrum, discrete, "
        "T2 and T1 are equivalent for the coprime spectrum",
        run_thm_c_t2);
    add("rem-s-strong",
        "in a uniserial module every nonzero submodule is strongly hollow",
        run_rem_s_strong);
    add("ex-strong",
        "in a uniserial module every proper submodule is strongly "
        "irreducible",
        run_ex_strong);
    add("rem-simple-char",
        "the second-spectrum topology is T0 with covariety basis, singleton "
        "closures by varieties, and socle-bounded empty covarieties",
        run_rem_simple_char);
    add("rem-max-char",
        "the coprime-spectrum topology is T0 with a cyclic covariety basis, "
        "singleton closures by varieties, and radical-bounded empty "
        "covarieties",
        run_rem_max_char);
    add("rem-corad-2",
        "the coradical operator is monotone and idempotent",
        run_rem_corad_2);
    add("rem-rad-2",
        "the radical operator is monotone and idempotent",
        run_rem_rad_2);

    // Hypothesis classes gating each conditional statement; empty means the
    // check applies to every instance.
    static const std::map<std::string, std::vector<std::string>> kHypotheses = {
        {"prop-c-exact", {"has-intermediate-submodule"}},
        {"prop-c-ann-1", {"multiplication"}},
        {"prop-c-ann-2", {"comultiplication"}},
        {"cor-mult-comult", {"multiplication", "comultiplication"}},
        {"cor-com-s", {"comultiplication"}},
        {"cor-r-s-c", {"module-is-the-ring"}},
        {"rem-gen-ass", {"comultiplication"}},
        {"prop-div-2", {"relatively-divisible-pair"}},
        {"prop-sum-cop", {"directly-decomposable"}},
        {"prop-sum-less", {"coprimeless-summands"}},
        {"lem-s-max", {"comultiplication"}},
        {"thm-s-top-2", {"spec-s-strongly-hollow"}},
        {"thm-c-top-2", {"spec-c-strongly-irreducible"}},
        {"prop-com-prop", {"comultiplication"}},
        {"prop-mul-prop", {"multiplication"}},
        {"lem-closure-s", {"top-s"}},
        {"lem-closure-c", {"top-c"}},
        {"thm-11", {"top-s"}},
        {"thm-c-11", {"top-c"}},
        {"prop-duo-irr", {"top-s"}},
        {"prop-c-irr", {"top-c", "completely-distributive"}},
        {"thm-corad-s", {"top-s"}},
        {"thm-corad-c", {"top-c", "completely-distributive"}},
        {"prop-max-irr", {"spec-s-strongly-hollow"}},
        {"prop-c-max-irr", {"completely-distributive", "spec-c-strongly-irreducible"}},
        {"cor-sober-s", {"spec-s-strongly-hollow"}},
        {"cor-sober-c", {"completely-distributive", "spec-c-strongly-irreducible"}},
        {"prop-uniform", {"top-s"}},
        {"thm-c-hollow", {"top-c"}},
        {"prop-it-irr", {"top-s", "all-second-simple"}},
        {"prop-irr-c", {"top-c", "all-coprime-maximal"}},
        {"thm-colocal", {"all-second-simple", "spec-s-strongly-hollow"}},
        {"thm-c-colocal", {"top-c", "complete-max-property", "all-coprime-maximal"}},
        {"lem-1n", {"spec-s-strongly-hollow"}},
        {"lem-c-1n", {"spec-c-strongly-irreducible"}},
        {"lem-s-t1", {"top-s"}},
        {"prop-c-pts", {"top-c"}},
        {"prop-T1", {"top-s"}},
        {"prop-c-T1", {"top-c"}},
        {"thm-T2", {"top-s", "min-property"}},
        {"thm-c-T2", {"top-c", "complete-max-property"}},
        {"rem-s-strong", {"uniserial"}},
        {"ex-strong", {"uniserial"}},
        {"rem-simple-char", {"top-s"}},
        {"rem-max-char", {"top-c"}},
    };
    for (auto& d : c) {
      auto it = kHypotheses.find(d.id);
      if (it != kHypotheses.end()) d.hypotheses = it->second;
    }
    return c;
  }();
  return catalog;
}

}  // namespace znspec
