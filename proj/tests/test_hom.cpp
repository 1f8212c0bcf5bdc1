#include <random>
#include <vector>

#include "doctest.h"
#include "mvf/errors.hpp"
#include "mvf/hom.hpp"
#include "mvf/sampling.hpp"
#include "oracles.hpp"

using namespace mvf;

namespace {

Signature single_chain(int n) {
  return Signature({{FactorKind::chain(n), Multiplicity::finite(1)}});
}

// Diagonal embedding of a chain into infinitely many copies of itself: every
// target coordinate reads the one source coordinate.
ProductHom diagonal_into_sequences(int n) {
  Signature src = single_chain(n);
  Signature tgt({{FactorKind::chain(n), Multiplicity::infinite()}});
  return ProductHom(src, tgt, {IndexRule{IndexRule::Kind::ConstIndex, 0, 0}});
}

// Coordinatewise doubling map: block k carries a chain of size n_k into the
// chain of size 2*n_k - 1 at the same index, final blocks infinite.
ProductHom chain_doubling_map() {
  std::vector<Block> src_blocks, tgt_blocks;
  std::vector<IndexRule> rules;
  for (int n = 2; n <= 6; ++n) {
    Multiplicity m = n == 6 ? Multiplicity::infinite() : Multiplicity::finite(1);
    src_blocks.push_back({FactorKind::chain(n), m});
    tgt_blocks.push_back({FactorKind::chain(2 * n - 1), m});
    rules.push_back(
        IndexRule{IndexRule::Kind::SameIndex, static_cast<std::size_t>(n - 2), 0});
  }
  return ProductHom(Signature(std::move(src_blocks)), Signature(std::move(tgt_blocks)),
                    std::move(rules));
}

}  // namespace

TEST_CASE("chain embeddings exist exactly when the divisibility condition holds") {
  for (int n = 2; n <= 12; ++n)
    for (int m = 2; m <= 12; ++m) {
      std::vector<Rat> atom_images = oracles::chain_hom_atom_images(n, m);
      bool divides = (m - 1) % (n - 1) == 0;
      CHECK(atom_images.size() == (divides ? 1u : 0u));
      if (divides) {
        // The unique embedding is the identity on values.
        CHECK(atom_images.front() == Rat(1, n - 1));
        ProductHom h(single_chain(n), single_chain(m),
                     {IndexRule{IndexRule::Kind::SameIndex, 0, 0}});
        for (int k = 0; k < n; ++k) {
          Element x = Element::constant(single_chain(n), Rat(k, n - 1));
          CHECK(h.apply(x).at(0, 0) == Rat(k, n - 1));
        }
      } else {
        CHECK_THROWS_AS(ProductHom(single_chain(n), single_chain(m),
                                   {IndexRule{IndexRule::Kind::SameIndex, 0, 0}}),
                        BadParameter);
      }
    }
}

TEST_CASE("construction validates shapes and coordinates") {
  Signature src({{FactorKind::chain(3), Multiplicity::finite(2)}});
  Signature tgt({{FactorKind::chain(3), Multiplicity::finite(4)}});
  // One rule per target block.
  CHECK_THROWS_AS(ProductHom(src, tgt, {}), BadParameter);
  // SameIndex cannot stretch two source coordinates over four target ones.
  CHECK_THROWS_AS(ProductHom(src, tgt, {IndexRule{IndexRule::Kind::SameIndex, 0, 0}}),
                  BadParameter);
  // A constant rule must read an existing coordinate.
  CHECK_THROWS_AS(ProductHom(src, tgt, {IndexRule{IndexRule::Kind::ConstIndex, 0, 5}}),
                  BadParameter);
  // Rules must name existing source blocks.
  CHECK_THROWS_AS(ProductHom(src, tgt, {IndexRule{IndexRule::Kind::ConstIndex, 3, 0}}),
                  BadParameter);
  // Overrides must stay on the grid and respect value embedding.
  CHECK_THROWS_AS(ProductHom(src, tgt, {IndexRule{IndexRule::Kind::ConstIndex, 0, 0}},
                             {{{0, 9}, {0, 0}}}),
                  BadParameter);
  CHECK_NOTHROW(ProductHom(src, tgt, {IndexRule{IndexRule::Kind::ConstIndex, 0, 0}},
                           {{{0, 3}, {0, 1}}}));
}

TEST_CASE("identity behaves as the identity and is coherent") {
  Signature sig({{FactorKind::chain(3), Multiplicity::finite(2)},
                 {FactorKind::chain(4), Multiplicity::infinite()}});
  ProductHom id = ProductHom::identity(sig);
  Sampler sampler(3);
  for (int i = 0; i < 50; ++i) {
    Element x = sampler.element(sig);
    CHECK(id.apply(x) == x);
  }
  CoherenceEquivalenceReport r = coherence_equivalence(id);
  CHECK(r.coherent);
  CHECK(r.complete);
  CHECK(r.preserves_max_compact);
  CHECK(r.equivalent);
  CHECK_FALSE(r.counterexample.has_value());
}

TEST_CASE("the diagonal into sequences is complete but not coherent") {
  ProductHom tau = diagonal_into_sequences(3);
  Element half = Element::constant(tau.source(), Rat(1, 2));
  Element image = tau.apply(half);
  CHECK(image.is_constant(Rat(1, 2)));

  CoherenceEquivalenceReport r = coherence_equivalence(tau);
  CHECK_FALSE(r.coherent);
  CHECK(r.complete);
  CHECK_FALSE(r.preserves_max_compact);
  CHECK(r.equivalent);
  REQUIRE(r.counterexample.has_value());
  CHECK(is_compact(*r.counterexample).compact);
  CHECK_FALSE(is_compact(tau.apply(*r.counterexample)).compact);
}

TEST_CASE("the coordinatewise doubling map is coherent and value-preserving") {
  ProductHom phi = chain_doubling_map();
  CoherenceEquivalenceReport r = coherence_equivalence(phi);
  CHECK(r.coherent);
  CHECK(r.complete);
  CHECK(r.preserves_max_compact);
  CHECK(r.equivalent);

  // A coordinate holding 1/(n-1) keeps the same rational value in the
  // doubled chain.
  for (std::size_t b = 0; b < phi.source().block_count(); ++b) {
    int n = phi.source().blocks()[b].kind.chain_size();
    Element x = Element::zero(phi.source()).with_coord(b, 0, Rat(1, n - 1));
    CHECK(phi.apply(x).at(b, 0) == Rat(1, n - 1));
  }
}

TEST_CASE("application preserves the algebra operations") {
  ProductHom phi = chain_doubling_map();
  Sampler sampler(11);
  const Signature& src = phi.source();
  CHECK(phi.apply(Element::zero(src)).is_zero());
  CHECK(phi.apply(Element::one(src)).is_one());
  for (int i = 0; i < 200; ++i) {
    Element x = sampler.element(src);
    Element y = sampler.element(src);
    CHECK(phi.apply(oplus(x, y)) == oplus(phi.apply(x), phi.apply(y)));
    CHECK(phi.apply(neg(x)) == neg(phi.apply(x)));
    CHECK(phi.apply(join(x, y)) == join(phi.apply(x), phi.apply(y)));
    CHECK(phi.apply(meet(x, y)) == meet(phi.apply(x), phi.apply(y)));
  }
}

TEST_CASE("operation preservation verified exhaustively on a small square") {
  Signature src({{FactorKind::chain(3), Multiplicity::finite(2)}});
  Signature tgt = single_chain(3);
  ProductHom h(src, tgt, {IndexRule{IndexRule::Kind::ConstIndex, 0, 1}});
  std::vector<Element> all = enumerate_elements(src);
  REQUIRE(all.size() == 9);
  for (const Element& x : all)
    for (const Element& y : all) {
      CHECK(h.apply(oplus(x, y)) == oplus(h.apply(x), h.apply(y)));
      CHECK(h.apply(neg(x)) == neg(h.apply(x)));
      // Finite meets pass through, the dual route to finite joins.
      std::vector<Element> pair = {x, y};
      std::vector<Element> imgs = {h.apply(x), h.apply(y)};
      CHECK(h.apply(meet_finite(src, pair)) == meet_finite(tgt, imgs));
      CHECK(h.apply(join_finite(src, pair)) == join_finite(tgt, imgs));
    }
}

TEST_CASE("overrides redirect single coordinates") {
  Signature src({{FactorKind::chain(3), Multiplicity::finite(2)}});
  Signature tgt({{FactorKind::chain(3), Multiplicity::finite(2)}});
  ProductHom h(src, tgt, {IndexRule{IndexRule::Kind::SameIndex, 0, 0}}, {{{0, 1}, {0, 0}}});
  CHECK(h.preimage(0, 0) == CoordRef{0, 0});
  CHECK(h.preimage(0, 1) == CoordRef{0, 0});
  Element x = Element::zero(src).with_coord(0, 0, Rat(1, 2));
  Element y = h.apply(x);
  CHECK(y.at(0, 0) == Rat(1, 2));
  CHECK(y.at(0, 1) == Rat(1, 2));
}

TEST_CASE("completeness report is exhaustive on enumerable algebras") {
  Signature src({{FactorKind::chain(3), Multiplicity::finite(2)}});
  ProductHom h(src, single_chain(3), {IndexRule{IndexRule::Kind::ConstIndex, 0, 0}});
  CompletenessReport r = is_complete(h);
  CHECK(r.complete);
  CHECK(r.exhaustive);

  // The diagonal's source carrier is finite even though its target is not,
  // so the verification can still sweep the whole domain.
  CompletenessReport diag = is_complete(diagonal_into_sequences(3));
  CHECK(diag.complete);
  CHECK(diag.exhaustive);

  CompletenessReport wide = is_complete(chain_doubling_map());
  CHECK(wide.complete);
  CHECK_FALSE(wide.exhaustive);
}

TEST_CASE("coherence requires chain products on both sides") {
  Signature interval({{FactorKind::unit_interval(), Multiplicity::finite(1)}});
  ProductHom h = ProductHom::identity(interval);
  CHECK_THROWS_AS(coherence_equivalence(h), NotAlgebraicSignature);
  CHECK_THROWS_AS(is_coherent_map(h), NotAlgebraicSignature);
  CHECK_THROWS_AS(preserves_maximal_compact(h), NotAlgebraicSignature);
}

TEST_CASE("both characterizations agree on randomly generated maps") {
  std::mt19937_64 rng(20240817);
  auto rand_int = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  int disagreements = 0;
  for (int trial = 0; trial < 300; ++trial) {
    // Random source: one to three chain blocks, finite or infinite index sets.
    std::vector<Block> src_blocks;
    int nblocks = rand_int(1, 3);
    for (int b = 0; b < nblocks; ++b) {
      int n = rand_int(2, 7);
      Multiplicity m = rand_int(0, 3) == 0 ? Multiplicity::infinite()
                                           : Multiplicity::finite(rand_int(1, 8));
      src_blocks.push_back({FactorKind::chain(n), m});
    }
    Signature src(src_blocks);

    // Random target blocks, each wired to a compatible source block.
    std::vector<Block> tgt_blocks;
    std::vector<IndexRule> rules;
    int tblocks = rand_int(1, 3);
    for (int t = 0; t < tblocks; ++t) {
      std::size_t sb = static_cast<std::size_t>(rand_int(0, nblocks - 1));
      int n = src_blocks[sb].kind.chain_size();
      int factor = rand_int(1, 2);
      int m = (n - 1) * factor + 1;
      IndexRule rule;
      bool same = rand_int(0, 1) == 0;
      Multiplicity tm = Multiplicity::finite(rand_int(1, 8));
      if (same) {
        if (src_blocks[sb].mult.is_finite())
          tm = Multiplicity::finite(static_cast<std::uint64_t>(
              rand_int(1, static_cast<int>(src_blocks[sb].mult.count()))));
        else if (rand_int(0, 1) == 0)
          tm = Multiplicity::infinite();
        rule = IndexRule{IndexRule::Kind::SameIndex, sb, 0};
      } else {
        std::uint64_t idx = static_cast<std::uint64_t>(
            src_blocks[sb].mult.is_finite()
                ? rand_int(0, static_cast<int>(src_blocks[sb].mult.count()) - 1)
                : rand_int(0, 30));
        if (rand_int(0, 4) == 0) tm = Multiplicity::infinite();
        rule = IndexRule{IndexRule::Kind::ConstIndex, sb, idx};
      }
      tgt_blocks.push_back({FactorKind::chain(m), tm});
      rules.push_back(rule);
    }
    ProductHom h(src, Signature(tgt_blocks), rules);
    CoherenceEquivalenceReport r = coherence_equivalence(h);
    if (!r.equivalent) ++disagreements;
    CHECK(r.coherent == (r.complete && r.preserves_max_compact));
    if (!r.coherent) {
      REQUIRE(r.counterexample.has_value());
      CHECK(is_compact(*r.counterexample).compact);
      CHECK_FALSE(is_compact(h.apply(*r.counterexample)).compact);
    }
  }
  CHECK(disagreements == 0);
}
