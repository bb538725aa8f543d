#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <set>

#include "znspec/module.hpp"
#include "znspec/ring.hpp"
#include "znspec/lattice.hpp"
#include "znspec/snf.hpp"

using namespace znspec;

namespace {

// Ideal arithmetic oracle on raw residue sets.
std::set<std::int64_t> residue_set(std::int64_t n, std::int64_t d) {
  std::set<std::int64_t> s;
  for (std::int64_t r = 0; r < n; ++r)
    if (r % d == 0) s.insert(r);
  return s;
}

std::int64_t divisor_of_set(std::int64_t n, const std::set<std::int64_t>& s) {
  std::int64_t g = n;
  for (auto r : s)
    if (r) g = std::gcd(g, r);
  return g;
}

}  // namespace

TEST_CASE("ideal arithmetic agrees with residue-set arithmetic") {
  for (std::int64_t n : {2, 6, 12, 30, 60}) {
    RingZn ring(n);
    for (auto d1 : ring.divisors)
      for (auto d2 : ring.divisors) {
        Ideal a(n, d1), b(n, d2);
        auto sa = residue_set(n, d1), sb = residue_set(n, d2);

        std::set<std::int64_t> sum;
        for (auto x : sa)
          for (auto y : sb) sum.insert((x + y) % n);
        REQUIRE((a + b).divisor == divisor_of_set(n, sum));

        std::set<std::int64_t> inter;
        for (auto x : sa)
          if (sb.count(x)) inter.insert(x);
        REQUIRE(intersect(a, b).divisor == divisor_of_set(n, inter));

        // Product ideal: additive closure of pairwise products.
        std::set<std::int64_t> prod;
        for (auto x : sa)
          for (auto y : sb) prod.insert((x * y) % n);
        std::set<std::int64_t> closed = prod;
        bool grew = true;
        while (grew) {
          grew = false;
          std::set<std::int64_t> next = closed;
          for (auto x : closed)
            for (auto y : prod)
              if (next.insert((x + y) % n).second) grew = true;
          closed = next;
        }
        REQUIRE((a * b).divisor == divisor_of_set(n, closed));
      }
  }
}

TEST_CASE("prime ideals of Z/nZ are the primes dividing n") {
  RingZn ring(60);
  REQUIRE(ring.primes == std::vector<std::int64_t>{2, 3, 5});
  REQUIRE(Ideal(60, 2).is_prime());
  REQUIRE(Ideal(60, 5).is_prime());
  REQUIRE_FALSE(Ideal(60, 4).is_prime());
  REQUIRE_FALSE(Ideal(60, 1).is_prime());
  REQUIRE_FALSE(Ideal(60, 60).is_prime());
  REQUIRE(Ideal(60, 60).is_zero());
  REQUIRE(Ideal(60, 1).is_unit_ideal());
}

TEST_CASE("smith normal form diagonalizes with a divisibility chain") {
  SmithResult r = smith_normal_form({{2, 0}, {0, 3}}, 2);
  REQUIRE(r.diagonal == std::vector<std::int64_t>{1, 6});
  r = smith_normal_form({{4, 0}, {0, 6}}, 2);
  REQUIRE(r.diagonal == std::vector<std::int64_t>{2, 12});
  r = smith_normal_form({{6, 4}, {2, 8}}, 2);
  REQUIRE(r.diagonal[0] == 2);
  REQUIRE(r.diagonal[1] % r.diagonal[0] == 0);
  // |det| preserved for square full-rank input
  REQUIRE(r.diagonal[0] * r.diagonal[1] == 40);
}

TEST_CASE("canonical shapes recombine cyclic summands") {
  REQUIRE(canonical_shape(6, {2, 3}).factors == std::vector<std::int64_t>{6});
  REQUIRE(canonical_shape(6, {6}).factors == std::vector<std::int64_t>{6});
  REQUIRE(canonical_shape(4, {2, 4}).factors == std::vector<std::int64_t>{2, 4});
  REQUIRE(canonical_shape(2, {2, 2}).factors == std::vector<std::int64_t>{2, 2});
  REQUIRE(canonical_shape(12, {2, 6, 6}).factors ==
          std::vector<std::int64_t>{2, 6, 6});
  REQUIRE(canonical_shape(30, {6, 10}).factors == std::vector<std::int64_t>{2, 30});
}

TEST_CASE("direct sums recompute the invariant chain") {
  ModuleShape z2{6, {2}}, z3{6, {3}};
  REQUIRE(direct_sum(z2, z3).factors == std::vector<std::int64_t>{6});
  ModuleShape a{2, {2}}, b{2, {2}};
  REQUIRE(direct_sum(a, b).factors == std::vector<std::int64_t>{2, 2});
  ModuleShape c{4, {2}}, d{4, {4}};
  REQUIRE(direct_sum(c, d).factors == std::vector<std::int64_t>{2, 4});
  REQUIRE(direct_sum(c, d).order() == c.order() * d.order());
}

TEST_CASE("element arithmetic is a module structure") {
  FiniteModule m(ModuleShape{12, {2, 6}});
  REQUIRE(m.size() == 12);
  for (std::uint32_t a = 0; a < m.size(); ++a) {
    auto ea = static_cast<FiniteModule::Elt>(a);
    REQUIRE(m.add(ea, m.neg(ea)) == 0);
    REQUIRE(m.add(ea, 0) == ea);
    REQUIRE(m.smul(1, ea) == ea);
    REQUIRE(m.smul(0, ea) == 0);
    for (std::uint32_t b = 0; b < m.size(); ++b) {
      auto eb = static_cast<FiniteModule::Elt>(b);
      REQUIRE(m.add(ea, eb) == m.add(eb, ea));
      for (std::int64_t r = 0; r < 12; ++r)
        REQUIRE(m.smul(r, m.add(ea, eb)) == m.add(m.smul(r, ea), m.smul(r, eb)));
    }
    // order by repeated addition
    std::int64_t ord = 1;
    FiniteModule::Elt x = ea;
    while (x != 0) {
      x = m.add(x, ea);
      ++ord;
    }
    REQUIRE(m.order_of(ea) == ord);
  }
}

TEST_CASE("instance parsing accepts summand lists and canonicalizes") {
  Instance i = parse_instance("n=6;M=2,3");
  REQUIRE(i.modulus == 6);
  REQUIRE(i.summands == std::vector<std::int64_t>{2, 3});
  REQUIRE(i.shape.factors == std::vector<std::int64_t>{6});
  REQUIRE(i.label() == "n=6;M=2,3");
  REQUIRE(i.shape.label() == "n=6;M=6");

  REQUIRE(parse_instance("n=12;M=12").shape.order() == 12);
  REQUIRE(parse_instance("n=4;M=2,4").shape.factors ==
          std::vector<std::int64_t>{2, 4});
}

TEST_CASE("instance parsing rejects malformed and non-dividing input") {
  REQUIRE_THROWS_AS(parse_instance("n=6"), ParseError);
  REQUIRE_THROWS_AS(parse_instance("m=6;M=2"), ParseError);
  REQUIRE_THROWS_AS(parse_instance("n=1;M=1"), ParseError);
  REQUIRE_THROWS_AS(parse_instance("n=6;M="), ParseError);
  REQUIRE_THROWS_AS(parse_instance("n=6;M=0"), ParseError);
  REQUIRE_THROWS_AS(parse_instance("n=6;M=2,x"), ParseError);
  REQUIRE_THROWS_AS(parse_instance("n=6;M=4"), ParseError);   // 4 does not divide 6
  REQUIRE_THROWS_AS(parse_instance("n=6;M=2,,3"), ParseError);
  REQUIRE_THROWS_AS(parse_instance("n=-6;M=2"), ParseError);
}

TEST_CASE("element budget enforcement") {
  std::vector<std::int64_t> big(13, 2);  // 8192 elements
  REQUIRE_THROWS_AS(FiniteModule(canonical_shape(2, big)), BudgetExceeded);
  try {
    FiniteModule m(canonical_shape(2, big));
  } catch (const BudgetExceeded& e) {
    REQUIRE(e.kind == "elements");
    REQUIRE(e.limit == kDefaultElementBudget);
  }
}

TEST_CASE("quotients have the right size, kernel, and structure") {
  for (const char* text : {"n=12;M=12", "n=4;M=2,4", "n=2;M=2,2,2", "n=6;M=6",
                           "n=9;M=3,9", "n=8;M=2,8"}) {
    Instance inst = parse_instance(text);
    auto mod = std::make_shared<const FiniteModule>(inst.shape);
    Lattice lat = Lattice::enumerate(mod);
    for (std::uint32_t l = 0; l < lat.size(); ++l) {
      QuotientResult q = quotient_by(*mod, lat.at(l).gens);
      CAPTURE(text, l);
      REQUIRE(q.shape.order() * lat.at(l).card == inst.shape.order());

      // projection is a surjective homomorphism with kernel L
      FiniteModule qm(q.shape);
      std::set<std::uint16_t> image;
      for (std::uint32_t x = 0; x < mod->size(); ++x) {
        image.insert(q.projection[x]);
        if ((q.projection[x] == 0) != lat.at(l).elems.test(x)) FAIL("kernel");
        for (std::uint32_t y = 0; y < mod->size(); ++y) {
          auto ex = static_cast<FiniteModule::Elt>(x);
          auto ey = static_cast<FiniteModule::Elt>(y);
          if (q.projection[mod->add(ex, ey)] !=
              qm.add(q.projection[x], q.projection[y]))
            FAIL("additivity");
        }
      }
      REQUIRE(image.size() == qm.size());

      // coset orders match element orders of the presented quotient
      std::map<std::int64_t, int> coset_orders, shape_orders;
      for (auto e : image) {
        std::int64_t ord = 1;
        FiniteModule::Elt x = e;
        while (x != 0) {
          x = qm.add(x, e);
          ++ord;
        }
        coset_orders[ord]++;
        shape_orders[qm.order_of(e)]++;
      }
      REQUIRE(coset_orders == shape_orders);
    }
  }
}

TEST_CASE("quotient special cases") {
  auto mod = std::make_shared<const FiniteModule>(parse_instance("n=4;M=4").shape);
  Lattice lat = Lattice::enumerate(mod);
  // M/0 = M
  QuotientResult by_zero = quotient_by(*mod, lat.at(lat.zero_id()).gens);
  REQUIRE(by_zero.shape.factors == std::vector<std::int64_t>{4});
  // M/M = 0, representable only as a quotient
  QuotientResult by_top = quotient_by(*mod, lat.at(lat.top_id()).gens);
  REQUIRE(by_top.shape.is_zero());
  REQUIRE(by_top.shape.order() == 1);
  // (Z/4)/<2> = Z/2
  QuotientResult mid = quotient_by(*mod, lat.at(1).gens);
  REQUIRE(mid.shape.factors == std::vector<std::int64_t>{2});
}
