#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "znspec/bitset.hpp"
#include "znspec/errors.hpp"
#include "znspec/module.hpp"

namespace znspec {

// Elements reachable from e by repeated addition, including 0.
inline Bitset cyclic_subgroup(const FiniteModule& m, FiniteModule::Elt e) {
  Bitset b(m.size());
  FiniteModule::Elt x = 0;
  do {
    b.set(x);
    x = m.add(x, e);
  } while (x != 0);
  return b;
}

// A + B for subgroups A, B, using that the running result is always a union
// of A-cosets: a representative already seen means its whole coset is in.
inline Bitset subgroup_sum(const FiniteModule& m, const Bitset& a, const Bitset& b) {
  Bitset r = a;
  std::vector<std::uint32_t> la = a.to_list();
  b.for_each([&](std::size_t be) {
    if (r.test(be)) return;
    for (auto ae : la)
      r.set(m.add(static_cast<FiniteModule::Elt>(ae),
                  static_cast<FiniteModule::Elt>(be)));
  });
  return r;
}

// One member of the submodule lattice: the full element set (ground truth),
// a deterministic generator list, and its index in the canonical order.
struct Submodule {
  Bitset elems;
  std::vector<std::uint16_t> gens;
  std::uint32_t id = 0;
  std::uint32_t card = 0;
};

// The complete lattice of submodules of a finite module, enumerated once and
// immutable afterwards. Everything here depends only on the invariant
// factors, not on the ring modulus, so lattices can be shared across rings.
class Lattice {
 public:
  static Lattice enumerate(std::shared_ptr<const FiniteModule> mod,
                           std::int64_t member_budget = kDefaultMemberBudget) {
    Lattice lat;
    lat.mod_ = std::move(mod);
    const FiniteModule& m = *lat.mod_;

    std::unordered_map<Bitset, std::uint32_t, BitsetHash> seen;
    std::vector<Bitset> sets;
    auto add_set = [&](Bitset b) {
      auto it = seen.find(b);
      if (it != seen.end()) return;
      if (static_cast<std::int64_t>(sets.size()) >= member_budget)
        throw BudgetExceeded("members", member_budget,
                             "module " + m.shape().label() +
                                 " has more submodules than the member "
                                 "budget of " +
                                 std::to_string(member_budget));
      seen.emplace(b, static_cast<std::uint32_t>(sets.size()));
      sets.push_back(std::move(b));
    };

    // Seed: the zero submodule and all cyclic submodules.
    {
      Bitset z(m.size());
      z.set(0);
      add_set(std::move(z));
    }
    for (std::uint32_t e = 1; e < m.size(); ++e)
      add_set(cyclic_subgroup(m, static_cast<FiniteModule::Elt>(e)));

    // Close under pairwise sum to a fixed point. The grow loop reaches every
    // unordered pair exactly once, including pairs with freshly added members.
    for (std::size_t i = 1; i < sets.size(); ++i) {
      for (std::size_t j = 1; j < i; ++j) {
        if (sets[j].is_subset_of(sets[i]) || sets[i].is_subset_of(sets[j]))
          continue;
        add_set(subgroup_sum(m, sets[i], sets[j]));
      }
    }

    std::sort(sets.begin(), sets.end(), canonical_less);
    lat.members_.resize(sets.size());
    for (std::uint32_t i = 0; i < sets.size(); ++i) {
      Submodule& s = lat.members_[i];
      s.elems = std::move(sets[i]);
      s.id = i;
      s.card = static_cast<std::uint32_t>(s.elems.count());
      s.gens = greedy_generators(m, s.elems);
    }
    lat.index_.reserve(lat.members_.size());
    for (auto& s : lat.members_) lat.index_.emplace(s.elems, s.id);

    lat.build_order();
    return lat;
  }

  const FiniteModule& module() const { return *mod_; }
  const std::shared_ptr<const FiniteModule>& module_ptr() const { return mod_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(members_.size()); }
  const Submodule& at(std::uint32_t i) const { return members_[i]; }
  std::uint32_t zero_id() const { return 0; }
  std::uint32_t top_id() const { return size() - 1; }

  std::uint32_t index_of(const Bitset& elems) const {
    auto it = index_.find(elems);
    assert(it != index_.end());
    return it->second;
  }

  bool leq(std::uint32_t i, std::uint32_t j) const { return above_[i].test(j); }
  const Bitset& above(std::uint32_t i) const { return above_[i]; }
  const Bitset& below(std::uint32_t i) const { return below_[i]; }

  std::uint32_t join(std::uint32_t i, std::uint32_t j) const {
    // Members are sorted by cardinality, so the least common upper bound in
    // canonical order is the join.
    return first_common(above_[i], above_[j]);
  }
  std::uint32_t meet(std::uint32_t i, std::uint32_t j) const {
    return last_common(below_[i], below_[j]);
  }

  std::uint32_t join_all(const Bitset& member_set) const {
    std::uint32_t acc = zero_id();
    member_set.for_each([&](std::size_t i) {
      acc = join(acc, static_cast<std::uint32_t>(i));
    });
    return acc;
  }
  std::uint32_t meet_all(const Bitset& member_set) const {
    std::uint32_t acc = top_id();
    member_set.for_each([&](std::size_t i) {
      acc = meet(acc, static_cast<std::uint32_t>(i));
    });
    return acc;
  }

  const Bitset& simples() const { return simples_; }
  const Bitset& maximals() const { return maximals_; }

  std::uint32_t socle_id() const { return join_all(simples_); }
  std::uint32_t radical_id() const { return meet_all(maximals_); }

  bool is_chain() const {
    for (std::uint32_t i = 0; i < size(); ++i)
      if (above_[i].count() + below_[i].count() != size() + 1) return false;
    return true;
  }

  // Cover pairs (lower, upper) of the containment order, i.e. the Hasse
  // diagram as a transitive reduction.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse_edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t i = 0; i < size(); ++i) {
      Bitset strict = above_[i];
      strict.reset(i);
      strict.for_each([&](std::size_t j) {
        Bitset between = below_[j] & strict;
        if (between.count() == 1) out.emplace_back(i, static_cast<std::uint32_t>(j));
      });
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // r * members[i] as a member id. rN only depends on gcd(r, exponent).
  std::uint32_t scaled(std::int64_t r, std::uint32_t i) const {
    std::int64_t e = mod_->shape().exponent();
    std::int64_t g = std::gcd(((r % e) + e) % e, e);
    std::uint64_t key = (static_cast<std::uint64_t>(g) << 32) | i;
    auto it = scaled_memo_.find(key);
    if (it != scaled_memo_.end()) return it->second;
    Bitset out(mod_->size());
    members_[i].elems.for_each([&](std::size_t x) {
      out.set(mod_->smul(g, static_cast<FiniteModule::Elt>(x)));
    });
    std::uint32_t res = index_of(out);
    scaled_memo_.emplace(key, res);
    return res;
  }

  // {x in M : d x = 0} as a member id.
  std::uint32_t annihilator_kernel(std::int64_t d) const {
    std::int64_t e = mod_->shape().exponent();
    std::int64_t g = std::gcd(((d % e) + e) % e, e);
    auto it = kernel_memo_.find(g);
    if (it != kernel_memo_.end()) return it->second;
    Bitset out(mod_->size());
    for (std::uint32_t x = 0; x < mod_->size(); ++x)
      if (mod_->smul(g, static_cast<FiniteModule::Elt>(x)) == 0) out.set(x);
    std::uint32_t res = index_of(out);
    kernel_memo_.emplace(g, res);
    return res;
  }

  // L <= L1 + L2 implies L <= L1 or L <= L2, for all member pairs.
  bool strongly_hollow(std::uint32_t i) const {
    if (i == zero_id()) return false;
    if (sh_memo_.empty()) sh_memo_.assign(size(), -1);
    if (sh_memo_[i] >= 0) return sh_memo_[i] != 0;
    bool ok = true;
    const Bitset& up = above_[i];
    for (std::uint32_t a = 0; a < size() && ok; ++a) {
      if (up.test(a)) continue;
      for (std::uint32_t b = 0; b <= a && ok; ++b) {
        if (up.test(b)) continue;
        if (up.test(join(a, b))) ok = false;
      }
    }
    sh_memo_[i] = ok ? 1 : 0;
    return ok;
  }

  // L1 ∩ L2 <= L implies L1 <= L or L2 <= L, for all member pairs.
  bool strongly_irreducible(std::uint32_t i) const {
    if (i == top_id()) return false;
    if (si_memo_.empty()) si_memo_.assign(size(), -1);
    if (si_memo_[i] >= 0) return si_memo_[i] != 0;
    bool ok = true;
    const Bitset& down = below_[i];
    for (std::uint32_t a = 0; a < size() && ok; ++a) {
      if (down.test(a)) continue;
      for (std::uint32_t b = 0; b <= a && ok; ++b) {
        if (down.test(b)) continue;
        if (down.test(meet(a, b))) ok = false;
      }
    }
    si_memo_[i] = ok ? 1 : 0;
    return ok;
  }

  // The sum of the proper submodules of L falls short of L. Any family
  // summing to L consists of submodules of L, so this finite test decides
  // the arbitrary-family condition.
  bool completely_hollow(std::uint32_t i) const {
    if (i == zero_id()) return false;
    Bitset strict = below_[i];
    strict.reset(i);
    return join_all(strict) != i;
  }

  // The intersection of the submodules strictly above L stays above L.
  bool completely_irreducible(std::uint32_t i) const {
    if (i == top_id()) return false;
    Bitset strict = above_[i];
    strict.reset(i);
    return meet_all(strict) != i;
  }

  // L1 ∩ L2 = L implies L1 = L or L2 = L.
  bool irreducible_member(std::uint32_t i) const {
    if (i == top_id()) return false;
    for (std::uint32_t a = 0; a < size(); ++a) {
      if (a == i) continue;
      for (std::uint32_t b = 0; b <= a; ++b) {
        if (b == i) continue;
        if (meet(a, b) == i) return false;
      }
    }
    return true;
  }

  bool distributive() const {
    if (distributive_ < 0) {
      bool ok = true;
      for (std::uint32_t a = 0; a < size() && ok; ++a)
        for (std::uint32_t b = 0; b < size() && ok; ++b)
          for (std::uint32_t c = b; c < size() && ok; ++c)
            if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) ok = false;
      distributive_ = ok ? 1 : 0;
    }
    return distributive_ != 0;
  }

  // Arbitrary-family distributivity, decided by exhausting families of size
  // up to three plus the full family. A failing pair already fails the
  // binary law, so the expensive part only runs on distributive lattices,
  // which stay small here.
  bool completely_distributive() const {
    if (completely_distributive_ < 0) {
      bool ok = distributive();
      for (std::uint32_t l = 0; l < size() && ok; ++l) {
        for (std::uint32_t a = 0; a < size() && ok; ++a)
          for (std::uint32_t b = a; b < size() && ok; ++b)
            for (std::uint32_t c = b; c < size() && ok; ++c) {
              std::uint32_t lhs = meet(meet(join(l, a), join(l, b)), join(l, c));
              std::uint32_t rhs = join(l, meet(meet(a, b), c));
              if (lhs != rhs) ok = false;
            }
        if (ok) {
          std::uint32_t lhs = top_id();
          for (std::uint32_t a = 0; a < size(); ++a) lhs = meet(lhs, join(l, a));
          if (lhs != l) ok = false;  // full family meets down to L + 0
        }
      }
      completely_distributive_ = ok ? 1 : 0;
    }
    return completely_distributive_ != 0;
  }

  std::string member_name(std::uint32_t i) const {
    const Submodule& s = members_[i];
    if (s.gens.empty()) return "0";
    std::string out = "<";
    for (std::size_t t = 0; t < s.gens.size(); ++t) {
      if (t) out += ",";
      out += mod_->element_name(s.gens[t]);
    }
    return out + ">";
  }

 private:
  static std::vector<std::uint16_t> greedy_generators(const FiniteModule& m,
                                                      const Bitset& target) {
    std::vector<std::uint16_t> gens;
    const std::size_t want = target.count();
    if (want == 1) return gens;
    Bitset closure(m.size());
    closure.set(0);
    std::size_t have = 1;
    for (std::size_t e = target.next(1); e != Bitset::npos;
         e = target.next(e + 1)) {
      if (closure.test(e)) continue;
      gens.push_back(static_cast<std::uint16_t>(e));
      closure = subgroup_sum(m, closure,
                             cyclic_subgroup(m, static_cast<FiniteModule::Elt>(e)));
      have = closure.count();
      if (have == want) break;
    }
    assert(have == want);
    return gens;
  }

  void build_order() {
    const std::uint32_t n = size();
    above_.assign(n, Bitset(n));
    below_.assign(n, Bitset(n));
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        if (members_[i].card > members_[j].card) continue;
        if (members_[i].elems.is_subset_of(members_[j].elems)) {
          above_[i].set(j);
          below_[j].set(i);
        }
      }
    simples_ = Bitset(n);
    maximals_ = Bitset(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (below_[i].count() == 2) simples_.set(i);
      if (above_[i].count() == 2) maximals_.set(i);
    }
  }

  static std::uint32_t first_common(const Bitset& a, const Bitset& b) {
    std::size_t p = Bitset::first_common(a, b);
    assert(p != Bitset::npos);
    return static_cast<std::uint32_t>(p);
  }
  static std::uint32_t last_common(const Bitset& a, const Bitset& b) {
    std::size_t p = Bitset::last_common(a, b);
    assert(p != Bitset::npos);
    return static_cast<std::uint32_t>(p);
  }

  std::shared_ptr<const FiniteModule> mod_;
  std::vector<Submodule> members_;
  std::unordered_map<Bitset, std::uint32_t, BitsetHash> index_;
  std::vector<Bitset> above_, below_;
  Bitset simples_, maximals_;

  // Memo tables; the suite evaluates lattices sequentially.
  mutable std::unordered_map<std::uint64_t, std::uint32_t> scaled_memo_;
  mutable std::unordered_map<std::int64_t, std::uint32_t> kernel_memo_;
  mutable std::vector<std::int8_t> sh_memo_, si_memo_;
  mutable std::int8_t distributive_ = -1;
  mutable std::int8_t completely_distributive_ = -1;
};

}  // namespace znspec
