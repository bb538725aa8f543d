#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "znspec/analysis.hpp"
#include "znspec/spectra.hpp"

using namespace znspec;

namespace {

std::shared_ptr<const InstanceAnalysis> an(const char* text) {
  return analyze(parse_instance(text));
}

std::vector<std::string> names(const InstanceAnalysis& a,
                               const std::vector<std::uint32_t>& ids) {
  std::vector<std::string> out;
  for (auto i : ids) out.push_back(a.lat->member_name(i));
  return out;
}

}  // namespace

TEST_CASE("ideal action on modules") {
  auto a = an("n=6;M=2,3");  // canonically Z/6
  const Lattice& lat = *a->lat;
  std::uint32_t im = ideal_times_module(lat, Ideal(6, 3), lat.top_id());
  REQUIRE(lat.at(im).card == 2);  // the order-2 part
  REQUIRE(im != lat.zero_id());
  REQUIRE(im != lat.top_id());
  REQUIRE(ideal_times_module(lat, Ideal(6, 1), lat.top_id()) == lat.top_id());
  REQUIRE(ideal_times_module(lat, Ideal(6, 6), lat.top_id()) == lat.zero_id());

  // monotone: bigger ideals move the module at least as far up
  for (auto d1 : a->ring.divisors)
    for (auto d2 : a->ring.divisors)
      if (d2 % d1 == 0)  // (d2) contained in (d1)
        REQUIRE(lat.leq(lat.scaled(d2, lat.top_id()), lat.scaled(d1, lat.top_id())));
}

TEST_CASE("colon ideals and annihilators") {
  auto a = an("n=6;M=2,3");
  const Lattice& lat = *a->lat;
  REQUIRE(colon_ideal(a->ring, lat, lat.top_id(), lat.top_id()).divisor == 1);
  // annihilator of the order-2 submodule of Z/6 is (2)
  std::uint32_t z2part = lat.annihilator_kernel(2);
  REQUIRE(lat.at(z2part).card == 2);
  REQUIRE(colon_ideal(a->ring, lat, lat.zero_id(), z2part).divisor == 2);

  auto b = an("n=12;M=12");
  REQUIRE(colon_ideal(b->ring, *b->lat, b->lat->zero_id(), b->lat->top_id())
              .divisor == 12);  // faithful
  REQUIRE(b->lat->member_name(annihilator_in_module(*b->lat, Ideal(12, 2))) ==
          "<6>");
  REQUIRE(annihilator_in_module(*b->lat, Ideal(12, 1)) == b->lat->zero_id());
  REQUIRE(annihilator_in_module(*b->lat, Ideal(12, 12)) == b->lat->top_id());
}

TEST_CASE("colon and annihilator fast paths agree with exhaustion") {
  for (const char* text : {"n=12;M=12", "n=4;M=2,4", "n=6;M=2,3", "n=2;M=2,2,2",
                           "n=9;M=3,9", "n=30;M=30"}) {
    auto a = an(text);
    const Lattice& lat = *a->lat;
    for (std::uint32_t i = 0; i < lat.size(); ++i) {
      CAPTURE(text, i);
      REQUIRE(annihilator_divisor(a->ring, lat, i) ==
              colon_ideal(a->ring, lat, lat.zero_id(), i).divisor);
      REQUIRE(colon_top_divisor(a->ring, lat, i) ==
              colon_ideal(a->ring, lat, i, lat.top_id()).divisor);
    }
  }
}

TEST_CASE("colon ideal is the largest ideal moving M into K") {
  for (const char* text : {"n=12;M=12", "n=4;M=2,4", "n=8;M=2,8"}) {
    auto a = an(text);
    const Lattice& lat = *a->lat;
    for (std::uint32_t k = 0; k < lat.size(); ++k) {
      std::int64_t c = a->colon_top[k];
      for (auto d : a->ring.divisors) {
        bool inside = lat.leq(lat.scaled(d, lat.top_id()), k);
        bool contained = d % c == 0;  // (d) inside (c)
        CAPTURE(text, k, d);
        REQUIRE(inside == contained);  // Galois adjunction
      }
    }
  }
}

TEST_CASE("coprime module examples") {
  auto mixed = an("n=6;M=2,3");
  REQUIRE_FALSE(mixed->preds.coprime);
  REQUIRE(mixed->preds.coprime_witness == 2);  // least witness divisor
  // the witness is genuine: 2M is neither 0 nor M
  std::uint32_t w = mixed->lat->scaled(2, mixed->top_id());
  REQUIRE(w != mixed->zero_id());
  REQUIRE(w != mixed->top_id());

  REQUIRE(an("n=2;M=2,2")->preds.coprime);  // homogeneous semisimple
  REQUIRE(an("n=5;M=5")->preds.coprime);    // simple
  REQUIRE_FALSE(an("n=4;M=4")->preds.coprime);
}

TEST_CASE("coprime-in examples and the quotient route") {
  auto a = an("n=4;M=4");
  const Lattice& lat = *a->lat;
  REQUIRE(coprime_in_status(a->ring, lat, 1, lat.top_id()).holds);  // maximal <2>
  REQUIRE_THROWS_AS(coprime_in_status(a->ring, lat, lat.top_id(), lat.top_id()),
                    NotProper);

  auto mixed = an("n=6;M=2,3");
  REQUIRE_FALSE(
      coprime_in_status(mixed->ring, *mixed->lat, mixed->zero_id(), mixed->top_id())
          .holds);

  // every maximal submodule is coprime, across a spread of instances
  for (const char* text : {"n=12;M=12", "n=4;M=2,4", "n=2;M=2,2,2", "n=9;M=3,3",
                           "n=30;M=30", "n=8;M=2,8"}) {
    auto b = an(text);
    b->lat->maximals().for_each([&](std::size_t m) {
      REQUIRE(b->coprime_in_def[m]);
    });
    // definitional route == quotient route, every proper member
    for (std::uint32_t k = 0; k + 1 < b->lat->size(); ++k) {
      CAPTURE(text, k);
      REQUIRE(b->coprime_in_def[k] == b->coprime_in_quot[k]);
    }
  }
}

TEST_CASE("second submodule examples") {
  auto a = an("n=4;M=4");
  REQUIRE(is_second(a->ring, *a->lat, 1));                 // the simple <2>
  REQUIRE_FALSE(is_second(a->ring, *a->lat, a->top_id())); // (2)M is neither 0 nor M
  REQUIRE_FALSE(is_second(a->ring, *a->lat, a->zero_id()));
  for (const char* text : {"n=12;M=12", "n=2;M=2,2", "n=4;M=2,4"}) {
    auto b = an(text);
    b->lat->simples().for_each([&](std::size_t s) {
      REQUIRE(is_second(b->ring, *b->lat, static_cast<std::uint32_t>(s)));
    });
  }
}

TEST_CASE("spectra of the ring as a module over itself") {
  auto a = an("n=12;M=12");
  REQUIRE(names(*a, a->spec_c.members) == std::vector<std::string>{"<3>", "<2>"});
  REQUIRE(names(*a, a->spec_s.members) == std::vector<std::string>{"<6>", "<4>"});
  REQUIRE(a->spec_c.member_set == a->lat->maximals());
  REQUIRE(a->spec_s.member_set == a->lat->simples());
}

TEST_CASE("homogeneous semisimple spectra contain every nonzero submodule") {
  for (const char* text : {"n=2;M=2,2", "n=3;M=3,3"}) {
    auto a = an(text);
    REQUIRE(a->spec_s.size() == a->lat->size() - 1);   // all nonzero
    REQUIRE(a->spec_c.size() == a->lat->size() - 1);   // all proper
    REQUIRE_FALSE(a->spec_s.member_set.test(a->zero_id()));
    REQUIRE_FALSE(a->spec_c.member_set.test(a->top_id()));
  }
}

TEST_CASE("variety boundary identities") {
  for (const char* text : {"n=12;M=12", "n=2;M=2,2", "n=4;M=2,4"}) {
    auto a = an(text);
    REQUIRE(a->var_s[a->zero_id()].none());
    REQUIRE(a->var_s[a->top_id()].count() == a->spec_s.size());
    REQUIRE(a->var_c[a->top_id()].none());
    REQUIRE(a->var_c[a->zero_id()].count() == a->spec_c.size());
    // covariety is the complement
    for (std::uint32_t l = 0; l < a->lat->size(); ++l) {
      Bitset x = covariety(a->var_s[l], a->spec_s.size());
      x |= a->var_s[l];
      REQUIRE(x.count() == a->spec_s.size());
    }
  }
  auto b = an("n=12;M=12");
  std::uint32_t six = b->lat->index_of(b->lat->at(1).elems);
  REQUIRE(b->lat->member_name(six) == "<6>");
  REQUIRE(b->var_s[six].count() == 1);
}

TEST_CASE("coradical and radical examples") {
  auto a = an("n=12;M=12");
  const Lattice& lat = *a->lat;
  REQUIRE(lat.member_name(coradical_second(lat, a->spec_s, lat.top_id())) == "<2>");
  REQUIRE(lat.member_name(radical_coprime(lat, a->spec_c, lat.zero_id())) == "<6>");
  REQUIRE(coradical_second(lat, a->spec_s, lat.zero_id()) == lat.zero_id());
  REQUIRE(radical_coprime(lat, a->spec_c, lat.top_id()) == lat.top_id());
}

TEST_CASE("strongly hollow and strongly irreducible examples") {
  auto chain = an("n=8;M=8");  // uniserial
  for (std::uint32_t l = 1; l < chain->lat->size(); ++l)
    REQUIRE(chain->lat->strongly_hollow(l));
  auto chain9 = an("n=9;M=9");
  for (std::uint32_t l = 0; l + 1 < chain9->lat->size(); ++l)
    REQUIRE(chain9->lat->strongly_irreducible(l));

  // the diagonal line in (Z/2)^2 is hollow (simple) but not strongly hollow
  auto p2 = an("n=2;M=2,2");
  bool found_diag = false;
  p2->lat->simples().for_each([&](std::size_t s) {
    REQUIRE_FALSE(p2->lat->strongly_hollow(static_cast<std::uint32_t>(s)));
    found_diag = true;
  });
  REQUIRE(found_diag);
  // simple submodules are completely hollow
  p2->lat->simples().for_each([&](std::size_t s) {
    REQUIRE(p2->lat->completely_hollow(static_cast<std::uint32_t>(s)));
  });
}

TEST_CASE("irreducible member examples") {
  auto mixed = an("n=6;M=2,3");  // two minimal submodules meet in 0
  REQUIRE_FALSE(mixed->lat->irreducible_member(mixed->zero_id()));
  auto chain = an("n=9;M=9");
  REQUIRE(chain->lat->irreducible_member(chain->zero_id()));
}

TEST_CASE("structural predicate record") {
  auto cyc = an("n=12;M=12");
  REQUIRE(cyc->preds.multiplication);
  REQUIRE(cyc->preds.comultiplication);
  REQUIRE_FALSE(cyc->preds.semisimple);
  REQUIRE(cyc->preds.distributive);
  REQUIRE(cyc->preds.atomic);
  REQUIRE(cyc->preds.coatomic);

  auto p2 = an("n=2;M=2,2");
  REQUIRE_FALSE(p2->preds.multiplication);
  REQUIRE_FALSE(p2->preds.comultiplication);
  REQUIRE(p2->preds.semisimple);
  REQUIRE(p2->preds.homogeneous_semisimple);
  REQUIRE_FALSE(p2->preds.distributive);
  REQUIRE_FALSE(p2->preds.hollow);
  REQUIRE_FALSE(p2->preds.uniform);

  auto chain = an("n=8;M=8");
  REQUIRE(chain->preds.hollow);
  REQUIRE(chain->preds.local);
  REQUIRE(chain->preds.colocal);
  REQUIRE(chain->preds.uniform);
  REQUIRE(chain->preds.uniserial);

  auto mixed = an("n=6;M=2,3");
  REQUIRE(mixed->preds.semisimple);
  REQUIRE_FALSE(mixed->preds.homogeneous_semisimple);

  // hollow coincides with local on finite modules; checked on a spread
  for (const char* text : {"n=12;M=12", "n=2;M=2,2", "n=8;M=8", "n=4;M=2,4"}) {
    auto a = an(text);
    REQUIRE(a->preds.hollow == a->preds.local);
  }
}

TEST_CASE("min- and max-property match the literal subset quantifiers") {
  for (const char* text : {"n=12;M=12", "n=2;M=2,2", "n=6;M=6", "n=4;M=2,4",
                           "n=8;M=8", "n=6;M=2,3", "n=9;M=3,3", "n=16;M=2,8"}) {
    auto a = an(text);
    CAPTURE(text);
    REQUIRE(has_min_property(*a->lat) == oracle::min_property_by_subsets(*a->lat));
    REQUIRE(has_max_property(*a->lat) == oracle::max_property_by_subsets(*a->lat));
  }
  REQUIRE_FALSE(an("n=2;M=2,2")->preds.min_property);  // lines sum over each other
  REQUIRE(an("n=6;M=6")->preds.min_property);
  REQUIRE(an("n=6;M=6")->preds.complete_max_property);
  REQUIRE(an("n=4;M=4")->preds.complete_max_property);  // unique maximal
}

TEST_CASE("generalized associated primes") {
  auto a = an("n=12;M=12");
  REQUIRE(generalized_associated_primes(a->ring, *a->lat) ==
          std::vector<std::int64_t>{2, 3});
  auto b = an("n=5;M=5");
  REQUIRE(generalized_associated_primes(b->ring, *b->lat) ==
          std::vector<std::int64_t>{5});
  auto c = an("n=2;M=2,2");
  REQUIRE(generalized_associated_primes(c->ring, *c->lat) ==
          std::vector<std::int64_t>{2});
}

TEST_CASE("relative divisibility") {
  auto p2 = an("n=2;M=2,2");
  for (std::uint32_t l = 0; l < p2->lat->size(); ++l)
    REQUIRE(relatively_divisible(p2->ring, *p2->lat, l));
  auto z4 = an("n=4;M=4");
  REQUIRE_FALSE(relatively_divisible(z4->ring, *z4->lat, 1));  // 2<2> = 0 but 2M ∩ <2> = <2>
  REQUIRE(relatively_divisible(z4->ring, *z4->lat, z4->top_id()));
}

TEST_CASE("second spectrum equals prime-annihilator locus on cyclic instances") {
  for (const char* text : {"n=12;M=12", "n=30;M=30", "n=8;M=8", "n=6;M=2,3"}) {
    auto a = an(text);
    REQUIRE(a->preds.comultiplication);
    Bitset expected(a->lat->size());
    for (std::uint32_t i = 1; i < a->lat->size(); ++i)
      if (is_prime_number(a->ann_div[i])) expected.set(i);
    REQUIRE(a->spec_s.member_set == expected);
  }
}
