#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvf/element.hpp"
#include "mvf/nucleus.hpp"
#include "mvf/sampling.hpp"
#include "mvf/signature.hpp"

namespace mvf {

// One chain-ring factor Z/p^k. Its ideals form a chain
// (1) = (p^0) > (p) > ... > (p^k) = (0) with k+1 members.
struct ChainRingFactor {
  long long p = 2;
  int k = 1;
  long long modulus() const;
  bool operator==(const ChainRingFactor&) const = default;
};

// A finite product of chain rings Z/p^k. Construction validates primality of
// each p, k >= 1, and that each modulus fits in a signed 64-bit integer.
class FiniteRing {
 public:
  explicit FiniteRing(std::vector<ChainRingFactor> factors);

  const std::vector<ChainRingFactor>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }

  // Product of (k_i + 1); throws CarrierTooLarge beyond the bound.
  std::uint64_t ideal_count(std::uint64_t bound = kDefaultEnumBound) const;

  std::string describe() const;  // "Z/8 x Z/9"

  bool operator==(const FiniteRing&) const = default;

 private:
  std::vector<ChainRingFactor> factors_;
};

// An ideal of a FiniteRing, stored as one generator exponent per factor:
// exponent e in {0..k} names the principal ideal (p^e) of Z/p^k, so e = 0 is
// the whole factor and e = k its zero ideal. Containment reverses exponents.
class RingIdeal {
 public:
  RingIdeal(FiniteRing ring, std::vector<int> exponents);

  static RingIdeal zero(const FiniteRing& ring);
  static RingIdeal whole(const FiniteRing& ring);

  const FiniteRing& ring() const { return ring_; }
  const std::vector<int>& exponents() const { return exponents_; }

  // Set containment: this contains other iff exponents are <= pointwise.
  bool contains(const RingIdeal& other) const;

  // One generator per factor: p^e reduced mod p^k (so the zero ideal prints 0).
  std::vector<long long> generator() const;
  std::string generator_string() const;  // "(2)" or "(4, 3)"

  bool operator==(const RingIdeal& other) const;

 private:
  FiniteRing ring_;
  std::vector<int> exponents_;
};

// The ideal lattice of the ring as a standard-form signature: one chain block
// of size k_i + 1 per factor.
Signature ideal_lattice_signature(const FiniteRing& ring);

// Order isomorphism Id(R) -> product of chains: exponent e on factor i maps
// to coordinate value (k_i - e) / k_i, so the zero ideal lands on 0 and the
// whole ring on 1.
Element ideal_to_element(const RingIdeal& ideal);
RingIdeal element_to_ideal(const FiniteRing& ring, const Element& x);

std::vector<RingIdeal> enumerate_ideals(const FiniteRing& ring,
                                        std::uint64_t bound = kDefaultEnumBound);

// Ann(I) = {r : rI = 0}, computed factorwise. Small factors are scanned
// residue by residue; factors too large to scan use the valuation of the
// annihilating generator directly.
RingIdeal annihilator(const RingIdeal& ideal);

// Product ideal IJ, generated by the product of the per-factor generators.
RingIdeal multiply_ideals(const RingIdeal& a, const RingIdeal& b);

// MV sum on ideals: I + J := Ann(Ann(I) * Ann(J)).
RingIdeal oplus_ideals(const RingIdeal& a, const RingIdeal& b);

// The maximal ideals (p_i) x (rest of the ring), one per factor, verified
// maximal against the enumerated lattice when it is small enough to scan.
std::vector<RingIdeal> maximal_ideals(const FiniteRing& ring);

// Radical: intersection of the maximal ideals containing I.
RingIdeal radical_ideal(const RingIdeal& ideal);

// Frame-side radical closed form on a chain product: coordinate v maps to 1
// when v = 1 and to (n - 2)/(n - 1) otherwise.
Element radical_on_frame(const Signature& sig, const Element& x);

// Agreement of the ring-side MV-structure with the chain-product one through
// ideal_to_element. Negation and the radical are compared on every ideal;
// the order isomorphism and the sum are compared on every pair when the pair
// count fits the budget, otherwise on seeded samples.
struct RingFrameOracleReport {
  bool order_iso = false;
  bool neg_matches = false;
  bool oplus_matches = false;
  bool radical_matches = false;
  bool pairs_exhaustive = false;
  std::uint64_t ideal_total = 0;
  bool all_ok() const { return order_iso && neg_matches && oplus_matches && radical_matches; }
};
RingFrameOracleReport verify_ring_frame_oracle(const FiniteRing& ring,
                                               const CheckOptions& opts = {});

// The radical as a nucleus on the ideal lattice: classification plus the
// structural facts tied to the ring shape. dense_matches compares density
// with "every factor has k = 1"; fixed_points_closed_form checks that the
// fixed-point set is the product of {(n-2)/(n-1), 1} per coordinate;
// mv_subalgebra_matches compares closure of the fixed points under the MV
// operations with "every factor has k = 1".
struct RadicalNucleusReport {
  NucleusClassification classification;
  bool dense_expected = false;
  bool dense_matches = false;
  bool fixed_points_closed_form = false;
  bool mv_expected = false;
  bool mv_subalgebra_matches = false;
  bool all_ok() const {
    return classification.is_nucleus() && classification.inductive.is_true() &&
           dense_matches && fixed_points_closed_form && mv_subalgebra_matches;
  }
};
RadicalNucleusReport radical_nucleus_report(const FiniteRing& ring,
                                            const CheckOptions& opts = {});

}  // namespace mvf
