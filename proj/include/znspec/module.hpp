#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "znspec/errors.hpp"
#include "znspec/ring.hpp"
#include "znspec/snf.hpp"

namespace znspec {

inline constexpr std::int64_t kDefaultElementBudget = 4096;
inline constexpr std::int64_t kDefaultMemberBudget = 5000;

// Isomorphism type of a finite Z/nZ-module: the invariant-factor chain
// d_1 | d_2 | ... | d_k with every d_i dividing n. An empty chain is the zero
// module, which only ever appears as a quotient result.
struct ModuleShape {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> factors;

  bool is_zero() const { return factors.empty(); }
  std::int64_t order() const {
    std::int64_t o = 1;
    for (auto d : factors) o *= d;
    return o;
  }
  std::int64_t exponent() const { return factors.empty() ? 1 : factors.back(); }

  std::string factor_list() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(factors[i]);
    }
    return s.empty() ? "0" : s;
  }
  std::string label() const {
    return "n=" + std::to_string(modulus) + ";M=" + factor_list();
  }

  bool operator==(const ModuleShape& o) const {
    return modulus == o.modulus && factors == o.factors;
  }
};

// Recombines an arbitrary list of cyclic summand orders into the canonical
// invariant-factor chain. Two summand lists give equal chains exactly when
// the direct sums are isomorphic.
inline ModuleShape canonical_shape(std::int64_t n,
                                   const std::vector<std::int64_t>& summands) {
  assert(n >= 2);
  const std::size_t k = summands.size();
  if (k == 0) return ModuleShape{n, {}};
  std::vector<std::vector<std::int64_t>> rel(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    assert(summands[i] >= 2 && n % summands[i] == 0);
    rel[i][i] = summands[i];
  }
  SmithResult snf = smith_normal_form(std::move(rel), k);
  ModuleShape out{n, {}};
  for (auto s : snf.diagonal)
    if (s > 1) out.factors.push_back(s);
  return out;
}

inline ModuleShape direct_sum(const ModuleShape& a, const ModuleShape& b) {
  assert(a.modulus == b.modulus);
  std::vector<std::int64_t> all = a.factors;
  all.insert(all.end(), b.factors.begin(), b.factors.end());
  return canonical_shape(a.modulus, all);
}

// Concrete element arithmetic for a module shape. Elements are coordinate
// tuples (a_1, ..., a_k), 0 <= a_i < d_i, packed into one index with the
// first coordinate most significant, so index order equals lexicographic
// tuple order and index 0 is the zero element.
class FiniteModule {
 public:
  using Elt = std::uint16_t;

  explicit FiniteModule(ModuleShape shape,
                        std::int64_t element_budget = kDefaultElementBudget)
      : shape_(std::move(shape)) {
    const std::int64_t order = shape_.order();
    if (order > element_budget)
      throw BudgetExceeded("elements", element_budget,
                           "module " + shape_.label() + " has " +
                               std::to_string(order) +
                               " elements, over the element budget of " +
                               std::to_string(element_budget));
    size_ = static_cast<std::uint32_t>(order);
    rank_ = static_cast<std::uint32_t>(shape_.factors.size());
    factors_.assign(shape_.factors.begin(), shape_.factors.end());
    coords_.resize(static_cast<std::size_t>(size_) * rank_);
    for (std::uint32_t e = 0; e < size_; ++e) {
      std::uint32_t rem = e;
      for (std::uint32_t i = rank_; i-- > 0;) {
        coords_[static_cast<std::size_t>(e) * rank_ + i] =
            static_cast<std::uint16_t>(rem % factors_[i]);
        rem /= factors_[i];
      }
    }
  }

  const ModuleShape& shape() const { return shape_; }
  std::uint32_t size() const { return size_; }
  std::uint32_t rank() const { return rank_; }
  Elt zero() const { return 0; }

  std::uint16_t coord(Elt e, std::uint32_t i) const {
    return coords_[static_cast<std::size_t>(e) * rank_ + i];
  }

  Elt encode(const std::vector<std::int64_t>& c) const {
    assert(c.size() == rank_);
    std::uint32_t id = 0;
    for (std::uint32_t i = 0; i < rank_; ++i) {
      std::int64_t x = c[i] % factors_[i];
      if (x < 0) x += factors_[i];
      id = id * static_cast<std::uint32_t>(factors_[i]) +
           static_cast<std::uint32_t>(x);
    }
    return static_cast<Elt>(id);
  }

  Elt add(Elt a, Elt b) const {
    const std::uint16_t* ca = &coords_[static_cast<std::size_t>(a) * rank_];
    const std::uint16_t* cb = &coords_[static_cast<std::size_t>(b) * rank_];
    std::uint32_t id = 0;
    for (std::uint32_t i = 0; i < rank_; ++i) {
      std::uint32_t d = static_cast<std::uint32_t>(factors_[i]);
      std::uint32_t s = static_cast<std::uint32_t>(ca[i]) + cb[i];
      if (s >= d) s -= d;
      id = id * d + s;
    }
    return static_cast<Elt>(id);
  }

  Elt neg(Elt a) const {
    const std::uint16_t* ca = &coords_[static_cast<std::size_t>(a) * rank_];
    std::uint32_t id = 0;
    for (std::uint32_t i = 0; i < rank_; ++i) {
      std::uint32_t d = static_cast<std::uint32_t>(factors_[i]);
      std::uint32_t s = ca[i] == 0 ? 0 : d - ca[i];
      id = id * d + s;
    }
    return static_cast<Elt>(id);
  }

  Elt smul(std::int64_t r, Elt a) const {
    const std::uint16_t* ca = &coords_[static_cast<std::size_t>(a) * rank_];
    std::uint32_t id = 0;
    for (std::uint32_t i = 0; i < rank_; ++i) {
      std::int64_t d = factors_[i];
      std::int64_t s = ((r % d) * ca[i]) % d;
      if (s < 0) s += d;
      id = id * static_cast<std::uint32_t>(d) + static_cast<std::uint32_t>(s);
    }
    return static_cast<Elt>(id);
  }

  std::int64_t order_of(Elt a) const {
    std::int64_t ord = 1;
    for (std::uint32_t i = 0; i < rank_; ++i) {
      std::int64_t d = factors_[i];
      std::int64_t c = coord(a, i);
      ord = std::lcm(ord, d / std::gcd(d, c));
    }
    return ord;
  }

  std::string element_name(Elt e) const {
    if (rank_ == 0) return "0";
    if (rank_ == 1) return std::to_string(coord(e, 0));
    std::string s = "(";
    for (std::uint32_t i = 0; i < rank_; ++i) {
      if (i) s += ",";
      s += std::to_string(coord(e, i));
    }
    return s + ")";
  }

 private:
  ModuleShape shape_;
  std::uint32_t size_ = 0;
  std::uint32_t rank_ = 0;
  std::vector<std::int64_t> factors_;
  std::vector<std::uint16_t> coords_;
};

// A parsed instance: the modulus, the summand list exactly as written, and
// the canonical shape it denotes.
struct Instance {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> summands;
  ModuleShape shape;

  std::string label() const {
    std::string s = "n=" + std::to_string(modulus) + ";M=";
    for (std::size_t i = 0; i < summands.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(summands[i]);
    }
    return s;
  }
};

// Instance text format: n=<modulus>;M=<d1,d2,...,dk>. Every d_i must be at
// least 2 and divide n; the summand list is canonicalized into the
// invariant-factor chain.
inline Instance parse_instance(const std::string& text) {
  auto fail = [&](const std::string& why) -> Instance {
    throw ParseError("bad instance '" + text + "': " + why);
  };
  std::size_t semi = text.find(';');
  if (semi == std::string::npos) return fail("expected 'n=<int>;M=<list>'");
  std::string npart = text.substr(0, semi);
  std::string mpart = text.substr(semi + 1);
  if (npart.rfind("n=", 0) != 0) return fail("missing 'n=' prefix");
  if (mpart.rfind("M=", 0) != 0) return fail("missing 'M=' prefix");

  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      fail("'" + s + "' is not a positive integer");
    if (s.size() > 9) fail("'" + s + "' is out of range");
    return std::stoll(s);
  };

  Instance inst;
  inst.modulus = parse_int(npart.substr(2));
  if (inst.modulus < 2) fail("modulus must be at least 2");

  std::string list = mpart.substr(2);
  if (list.empty()) fail("empty factor list");
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t comma = list.find(',', pos);
    std::string item = list.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::int64_t d = parse_int(item);
    if (d < 2) fail("factor " + std::to_string(d) + " must be at least 2");
    if (inst.modulus % d != 0)
      fail("factor " + std::to_string(d) + " does not divide the modulus " +
           std::to_string(inst.modulus) +
           " (every factor must divide n for the divisibility chain to hold)");
    inst.summands.push_back(d);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  inst.shape = canonical_shape(inst.modulus, inst.summands);
  return inst;
}

// Quotient of M by the subgroup generated by the given elements: the
// canonical shape of M/L together with the projection on element ids.
struct QuotientResult {
  ModuleShape shape;
  std::vector<std::uint16_t> projection;  // indexed by element id of M
};

inline QuotientResult quotient_by(const FiniteModule& m,
                                  const std::vector<std::uint16_t>& gens,
                                  std::int64_t modulus = 0) {
  const std::size_t k = m.rank();
  QuotientResult out;
  out.shape.modulus = modulus ? modulus : m.shape().modulus;
  if (k == 0) {
    out.projection.assign(1, 0);
    return out;
  }

  std::vector<std::vector<std::int64_t>> rel;
  rel.reserve(k + gens.size());
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> row(k, 0);
    row[i] = m.shape().factors[i];
    rel.push_back(std::move(row));
  }
  for (auto g : gens) {
    std::vector<std::int64_t> row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = m.coord(g, i);
    rel.push_back(std::move(row));
  }

  SmithResult snf = smith_normal_form(std::move(rel), k);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < k; ++i) {
    assert(snf.diagonal[i] > 0);
    if (snf.diagonal[i] > 1) {
      out.shape.factors.push_back(snf.diagonal[i]);
      kept.push_back(i);
    }
  }

  out.projection.resize(m.size());
  for (std::uint32_t e = 0; e < m.size(); ++e) {
    std::uint32_t id = 0;
    for (auto j : kept) {
      std::int64_t s = snf.diagonal[j];
      std::int64_t y = 0;
      for (std::size_t i = 0; i < k; ++i)
        y += static_cast<std::int64_t>(m.coord(e, static_cast<std::uint32_t>(i))) *
             snf.col_transform[i * k + j];
      y %= s;
      if (y < 0) y += s;
      id = id * static_cast<std::uint32_t>(s) + static_cast<std::uint32_t>(y);
    }
    out.projection[e] = static_cast<std::uint16_t>(id);
  }
  return out;
}

}  // namespace znspec
