#pragma once

#include <cstdint>
#include <random>

#include "mvf/element.hpp"

namespace mvf {

// Shared knobs for the checking routines. Exhaustive passes are used whenever
// the carrier (or the pair count) fits the budgets; otherwise checks fall
// back to seeded sampling and say so in their reports.
struct CheckOptions {
  std::uint64_t enum_bound = kDefaultEnumBound;  // max carrier size to materialize
  std::uint64_t pair_budget = 2'000'000;         // max pairs for exhaustive binary laws
  int samples = 500;                             // sampled checks per law
  std::uint64_t witness_prefix = 64;             // chain-witness terms to validate
  std::uint64_t seed = 0;
};

// Deterministic random elements for property checks. Indices into infinite
// blocks are drawn from a small window so representations stay readable.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  Rat factor_value(const FactorKind& kind);
  std::uint64_t index_in(const Multiplicity& mult, std::uint64_t window = 64);
  // Arbitrary element: random block defaults plus a few random exceptions.
  Element element(const Signature& sig, int max_exceptions = 3);
  // Random compact element: finite support, zero on unit-interval factors.
  Element compact_element(const Signature& sig, int max_support = 3);
  // Random characteristic function of a finite set.
  Element chi(const Signature& sig, int max_support = 3);

 private:
  std::mt19937_64 rng_;
};

}  // namespace mvf
