#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvf/element.hpp"

namespace mvf {

// Join/meet of finitely many elements; the empty join is 0 and the empty meet
// is 1, matching the frame conventions.
Element join_finite(const Signature& sig, std::span<const Element> xs);
Element meet_finite(const Signature& sig, std::span<const Element> xs);

// Largest element whose meet with x is 0: coordinatewise 1 on the zero set of
// x and 0 elsewhere.
Element pseudocomplement(const Element& x);

// Membership in the Boolean center, decided two ways that must agree: the
// coordinatewise criterion (all values in {0,1}) and idempotence x oplus x == x.
bool in_boolean_center(const Element& x);
bool in_boolean_center_by_idempotence(const Element& x);

// A witness that an element x is not compact: an increasing chain whose join
// dominates x while no single term does. Terms are indexed from 1.
struct ChainWitness {
  enum class Kind { ExhaustFiniteSupport, RationalRamp };
  Kind kind;
  std::size_t block = 0;      // block the witness manipulates
  std::uint64_t index = 0;    // ramp coordinate within that block
  Rat limit;                  // ramp target value
  Element target;             // the element being refuted
  Element declared_sup;       // join of the chain (equals target here)
  std::string formula;        // printable description of the n-th term
  Element term(std::uint64_t n) const;
};

struct CompactnessVerdict {
  bool compact = false;
  std::optional<ChainWitness> witness;  // present exactly when !compact
};

// Closed-form compactness test: compact iff finite support and zero on every
// unit-interval coordinate.
CompactnessVerdict is_compact(const Element& x);

// Mechanical validation of a witness prefix: terms increase, none dominates
// the target, and the declared join dominates the target.
struct WitnessCheck {
  bool monotone = false;
  bool sup_dominates = false;
  bool no_term_dominates = false;
  bool ok() const { return monotone && sup_dominates && no_term_dominates; }
};
WitnessCheck check_witness(const ChainWitness& w, std::uint64_t prefix_len = 64);

// Description of the compact (or maximal compact) elements: a predicate, a
// printable summary, and the full list when the carrier is small enough.
struct ElementSetDescription {
  std::string text;
  std::function<bool(const Element&)> contains;
  std::optional<std::vector<Element>> materialized;
};

ElementSetDescription compact_elements(const Signature& sig,
                                       std::uint64_t bound = kDefaultEnumBound);
// Maximal members of the compact set. Defined for signatures without
// unit-interval factors (where the compact elements form an ideal with
// 0/1-valued maximal members) and for pure interval powers (where it is {0});
// mixed signatures are rejected.
ElementSetDescription maximal_compact_elements(const Signature& sig,
                                               std::uint64_t bound = kDefaultEnumBound);

// 0/1-valued with finitely many ones.
bool is_chi_of_finite_set(const Element& x);

// x is way below y: join(y, pseudocomplement(x)) == 1.
bool way_below(const Element& x, const Element& y);

// Regular elements are exactly the fixed points of double pseudocomplement;
// the closed form is "all coordinates in {0,1}".
bool is_regular_element(const Element& x);

struct FrameClassification {
  bool algebraic = false;
  bool coherent = false;
  bool regular = false;  // regularity within the algebraic case
  bool fip = false;      // compact elements meet the finite-intersection property
  bool is_powerset_algebra = false;
  bool operator==(const FrameClassification&) const = default;
};

FrameClassification classify(const Signature& sig);

}  // namespace mvf
