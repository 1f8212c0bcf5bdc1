#include <vector>

#include "doctest.h"
#include "mvf/errors.hpp"
#include "mvf/frame.hpp"
#include "mvf/lukring.hpp"
#include "oracles.hpp"

using namespace mvf;

namespace {

FiniteRing z8() { return FiniteRing({{2, 3}}); }
FiniteRing z4_x_z9() { return FiniteRing({{2, 2}, {3, 2}}); }

}  // namespace

TEST_CASE("ring construction validates factors") {
  CHECK(FiniteRing({{2, 3}, {3, 2}}).describe() == "Z/8 x Z/9");
  CHECK(z8().ideal_count() == 4);
  CHECK(z4_x_z9().ideal_count() == 9);
  CHECK_THROWS_AS(FiniteRing({{4, 1}}), BadParameter);   // 4 is not prime
  CHECK_THROWS_AS(FiniteRing({{2, 0}}), BadParameter);   // k >= 1
  CHECK_THROWS_AS(FiniteRing({{2, 63}}), BadParameter);  // modulus overflows
}

TEST_CASE("the ideals of a chain ring form a chain under containment") {
  FiniteRing r = z8();
  std::vector<RingIdeal> ideals = enumerate_ideals(r);
  REQUIRE(ideals.size() == 4);
  RingIdeal whole = RingIdeal::whole(r);
  RingIdeal zero = RingIdeal::zero(r);
  CHECK(whole.generator_string() == "(1)");
  CHECK(zero.generator_string() == "(0)");
  CHECK(RingIdeal(r, {1}).generator_string() == "(2)");
  CHECK(RingIdeal(r, {2}).generator_string() == "(4)");
  CHECK(whole.contains(RingIdeal(r, {1})));
  CHECK(RingIdeal(r, {1}).contains(RingIdeal(r, {2})));
  CHECK(RingIdeal(r, {2}).contains(zero));
  CHECK_FALSE(zero.contains(RingIdeal(r, {2})));
  CHECK_THROWS_AS(RingIdeal(r, {4}), BadParameter);     // exponent beyond k
  CHECK_THROWS_AS(RingIdeal(r, {1, 1}), BadParameter);  // wrong arity
}

TEST_CASE("the lattice embedding sends inclusion to the coordinate order") {
  FiniteRing r = z8();
  Signature sig = ideal_lattice_signature(r);
  CHECK(sig == Signature({{FactorKind::chain(4), Multiplicity::finite(1)}}));

  // (0) < (4) < (2) < Z/8 maps to 0 < 1/3 < 2/3 < 1.
  CHECK(ideal_to_element(RingIdeal::zero(r)).at(0, 0) == Rat(0));
  CHECK(ideal_to_element(RingIdeal(r, {2})).at(0, 0) == Rat(1, 3));
  CHECK(ideal_to_element(RingIdeal(r, {1})).at(0, 0) == Rat(2, 3));
  CHECK(ideal_to_element(RingIdeal::whole(r)).at(0, 0) == Rat(1));

  for (const RingIdeal& a : enumerate_ideals(r))
    for (const RingIdeal& b : enumerate_ideals(r)) {
      CHECK(a.contains(b) == leq(ideal_to_element(b), ideal_to_element(a)));
      CHECK(element_to_ideal(r, ideal_to_element(a)) == a);
    }
}

TEST_CASE("annihilators match a residue-level scan") {
  for (const FiniteRing& r : {z8(), z4_x_z9(), FiniteRing({{5, 2}}), FiniteRing({{2, 1}, {3, 3}})})
    for (const RingIdeal& ideal : enumerate_ideals(r))
      CHECK(oracles::annihilator_matches_residues(r, ideal, annihilator(ideal)));

  // The named values: Ann((2)) = (4) in Z/8, Ann(0) = R, Ann(R) = 0.
  FiniteRing r = z8();
  CHECK(annihilator(RingIdeal(r, {1})) == RingIdeal(r, {2}));
  CHECK(annihilator(RingIdeal::zero(r)) == RingIdeal::whole(r));
  CHECK(annihilator(RingIdeal::whole(r)) == RingIdeal::zero(r));
}

TEST_CASE("ideal products match the residue-level span") {
  for (const FiniteRing& r : {z8(), z4_x_z9()})
    for (const RingIdeal& a : enumerate_ideals(r))
      for (const RingIdeal& b : enumerate_ideals(r))
        CHECK(oracles::product_matches_residues(r, a, b, multiply_ideals(a, b)));
}

TEST_CASE("the MV sum of ideals reproduces truncated addition of exponents") {
  FiniteRing r = z8();
  // (4) + (4) = (2): annihilators are (2) and (2), their product is (4).
  CHECK(oplus_ideals(RingIdeal(r, {2}), RingIdeal(r, {2})) == RingIdeal(r, {1}));
  CHECK(oplus_ideals(RingIdeal(r, {1}), RingIdeal(r, {1})) == RingIdeal::whole(r));
  CHECK(oplus_ideals(RingIdeal::zero(r), RingIdeal(r, {2})) == RingIdeal(r, {2}));

  // Through the embedding this is the truncated coordinate sum.
  for (const FiniteRing& ring : {z8(), z4_x_z9()})
    for (const RingIdeal& a : enumerate_ideals(ring))
      for (const RingIdeal& b : enumerate_ideals(ring))
        CHECK(ideal_to_element(oplus_ideals(a, b)) ==
              oplus(ideal_to_element(a), ideal_to_element(b)));
}

TEST_CASE("maximal ideals drop one exponent per factor") {
  FiniteRing r = z4_x_z9();
  std::vector<RingIdeal> maxes = maximal_ideals(r);
  REQUIRE(maxes.size() == 2);
  CHECK(maxes[0] == RingIdeal(r, {1, 0}));
  CHECK(maxes[1] == RingIdeal(r, {0, 1}));
}

TEST_CASE("the radical intersects the containing maximal ideals") {
  FiniteRing r = z8();
  // sqrt(0) = (2) in Z/8, which embeds as 2/3.
  RingIdeal rad = radical_ideal(RingIdeal::zero(r));
  CHECK(rad == RingIdeal(r, {1}));
  CHECK(ideal_to_element(rad).at(0, 0) == Rat(2, 3));
  CHECK(radical_ideal(RingIdeal::whole(r)) == RingIdeal::whole(r));

  // Radicals are idempotent and dominate their argument.
  for (const FiniteRing& ring : {z8(), z4_x_z9(), FiniteRing({{2, 1}, {5, 1}})})
    for (const RingIdeal& a : enumerate_ideals(ring)) {
      RingIdeal ra = radical_ideal(a);
      CHECK(ra.contains(a));
      CHECK(radical_ideal(ra) == ra);
      // Exponent rule: anything proper flattens to exponent 1.
      for (std::size_t i = 0; i < ring.factor_count(); ++i)
        CHECK(ra.exponents()[i] == (a.exponents()[i] >= 1 ? 1 : 0));
    }
}

TEST_CASE("ring radical and frame radical agree through the embedding") {
  for (const FiniteRing& ring : {z8(), z4_x_z9(), FiniteRing({{3, 3}, {2, 1}, {5, 2}})}) {
    Signature sig = ideal_lattice_signature(ring);
    for (const RingIdeal& a : enumerate_ideals(ring))
      CHECK(ideal_to_element(radical_ideal(a)) == radical_on_frame(sig, ideal_to_element(a)));
  }
}

TEST_CASE("the full ring-versus-frame comparison passes on sample rings") {
  for (const FiniteRing& ring :
       {z8(), z4_x_z9(), FiniteRing({{2, 1}}), FiniteRing({{2, 2}, {3, 1}, {5, 1}})}) {
    RingFrameOracleReport rep = verify_ring_frame_oracle(ring);
    CHECK(rep.order_iso);
    CHECK(rep.neg_matches);
    CHECK(rep.oplus_matches);
    CHECK(rep.radical_matches);
    CHECK(rep.pairs_exhaustive);
    CHECK(rep.ideal_total == ring.ideal_count());
    CHECK(rep.all_ok());
  }
}

TEST_CASE("large lattices fall back to sampled pair checks") {
  // Twelve factors of Z/2 give 4096 ideals; the pair count exceeds the
  // budget, so the order and sum comparisons run on seeded samples.
  std::vector<ChainRingFactor> fs(12, ChainRingFactor{2, 1});
  FiniteRing big(fs);
  CheckOptions opts;
  opts.samples = 50;
  RingFrameOracleReport rep = verify_ring_frame_oracle(big, opts);
  CHECK(rep.all_ok());
  CHECK_FALSE(rep.pairs_exhaustive);
  CHECK(rep.ideal_total == 4096);
}

TEST_CASE("the radical nucleus report ties density to squarefree factors") {
  RadicalNucleusReport a = radical_nucleus_report(z8());
  CHECK(a.classification.is_nucleus());
  CHECK(a.classification.inductive.is_true());
  CHECK_FALSE(a.dense_expected);
  CHECK(a.dense_matches);
  CHECK(a.fixed_points_closed_form);
  CHECK_FALSE(a.mv_expected);
  CHECK(a.mv_subalgebra_matches);
  CHECK(a.all_ok());

  RadicalNucleusReport b = radical_nucleus_report(FiniteRing({{2, 1}, {3, 1}}));
  CHECK(b.dense_expected);  // all exponents 1: the radical is the identity
  CHECK(b.mv_expected);     // and the lattice is a power of the two-element chain
  CHECK(b.all_ok());

  RadicalNucleusReport c = radical_nucleus_report(z4_x_z9());
  CHECK_FALSE(c.dense_expected);
  CHECK_FALSE(c.mv_expected);
  CHECK(c.all_ok());
}

TEST_CASE("the radical decomposes over the compacts below each ideal") {
  // Inductivity, checked at the lattice level: the radical of an ideal is the
  // join of the radicals of the lattice elements below it.
  for (const FiniteRing& ring : {z8(), z4_x_z9()}) {
    Signature sig = ideal_lattice_signature(ring);
    std::vector<Element> all = enumerate_elements(sig);
    for (const Element& x : all) {
      Element acc = Element::zero(sig);
      for (const Element& a : all)
        if (leq(a, x)) acc = join(acc, radical_on_frame(sig, a));
      CHECK(acc == radical_on_frame(sig, x));
    }
  }
}
