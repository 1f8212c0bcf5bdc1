#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mvf/element.hpp"
#include "mvf/frame.hpp"
#include "mvf/hom.hpp"
#include "mvf/sampling.hpp"
#include "mvf/signature.hpp"

namespace mvf {

// One block of an integer-vector group with strong unit: the coordinates in
// the block share the unit value, and the block is repeated per multiplicity.
struct LuBlock {
  long long unit = 1;  // at least 1
  Multiplicity mult = Multiplicity::finite(1);
  bool operator==(const LuBlock&) const = default;
};

// A lattice-ordered abelian group of integer vectors with a blockwise
// constant strong unit, ordered pointwise.
class LuSignature {
 public:
  explicit LuSignature(std::vector<LuBlock> blocks);

  const std::vector<LuBlock>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  bool index_set_finite() const;
  std::string describe() const;  // "<Z^2, 2> x <Z^inf, 3>"

  bool operator==(const LuSignature&) const = default;

 private:
  std::vector<LuBlock> blocks_;
};

// A group element: integer coordinates, finitely many exceptions around a
// per-block default. Canonical form keeps exceptions sorted, distinct from
// the default, and (on finite blocks) chooses the majority value as default.
class LuElement {
 public:
  struct BlockValues {
    long long def = 0;
    std::vector<std::pair<std::uint64_t, long long>> exceptions;
    bool operator==(const BlockValues&) const = default;
  };

  static LuElement constant(const LuSignature& sig, long long v);
  static LuElement zero(const LuSignature& sig) { return constant(sig, 0); }
  static LuElement unit(const LuSignature& sig);
  static LuElement make(const LuSignature& sig, std::vector<BlockValues> values);
  static LuElement make(std::shared_ptr<const LuSignature> sig, std::vector<BlockValues> values);

  const LuSignature& sig() const { return *sig_; }
  const std::shared_ptr<const LuSignature>& sig_ptr() const { return sig_; }
  const std::vector<BlockValues>& blocks() const { return blocks_; }

  long long at(std::size_t block, std::uint64_t index) const;
  LuElement with_coord(std::size_t block, std::uint64_t index, long long v) const;

  bool is_constant(long long v) const;
  bool is_zero() const { return is_constant(0); }
  // Zero outside finitely many coordinates.
  bool finite_support() const;

  bool operator==(const LuElement& other) const;

 private:
  LuElement(std::shared_ptr<const LuSignature> sig, std::vector<BlockValues> blocks)
      : sig_(std::move(sig)), blocks_(std::move(blocks)) {}

  std::shared_ptr<const LuSignature> sig_;
  std::vector<BlockValues> blocks_;
};

// Pointwise group and lattice structure.
LuElement lu_add(const LuElement& a, const LuElement& b);
LuElement lu_sub(const LuElement& a, const LuElement& b);
LuElement lu_neg(const LuElement& a);
LuElement lu_min(const LuElement& a, const LuElement& b);
LuElement lu_max(const LuElement& a, const LuElement& b);
bool lu_leq(const LuElement& a, const LuElement& b);

LuElement pos_part(const LuElement& a);  // a joined with 0
LuElement neg_part(const LuElement& a);  // -a joined with 0
LuElement abs_val(const LuElement& a);   // a joined with -a

// Operations of the unit interval [0, u]: truncated addition and the
// reflection at the unit. Both require their arguments to lie in [0, u].
LuElement unit_oplus(const LuElement& a, const LuElement& b);
LuElement unit_neg(const LuElement& a);

// Least N >= 0 with |a| <= N * unit; finite for every represented element.
long long least_unit_multiple(const LuElement& a);

// The unit interval of the group as a chain product: a block with unit u
// becomes a chain with u + 1 values, integer j corresponding to j/u.
Signature gamma(const LuSignature& sig);

// Inverse direction on chain products: a chain with n values becomes a block
// with unit n - 1. Unit-interval factors have no integer model.
LuSignature phi(const Signature& sig);

// Value maps along gamma and phi.
Element gamma_element(const LuElement& g);  // requires 0 <= g <= unit
LuElement phi_element(const Element& x);

// Sampled agreement of the induced interval operations with the chain
// product: truncated sums and reflections commute with the value map, and
// the interval satisfies the involution and absorption identities.
struct GammaReport {
  Signature sig;
  bool ops_agree = false;
  bool axioms_hold = false;
  int samples = 0;
};
GammaReport gamma_verified(const LuSignature& sig, const CheckOptions& opts = {});

// Compactness in the group sense: |g| capped at the unit must be compact in
// the unit interval. The verdict is the frame one for that capped element.
CompactnessVerdict is_lu_compact(const LuElement& g);

// Every represented group is algebraic: each nonnegative element is the join
// of the compact elements below it. The report checks the identity on seeded
// samples through explicit finite-support approximants; elements with
// negative coordinates are split into positive and negative parts first.
struct LuAlgebraicReport {
  bool algebraic = true;
  int samples = 0;
  bool approximants_compact = true;  // every approximant is compact in the group sense
  bool approximants_below = true;    // every approximant sits below its element
  bool join_reaches = true;          // each described coordinate is attained
  std::string note;
};
LuAlgebraicReport is_algebraic_lu_frame(const LuSignature& sig, const CheckOptions& opts = {});

// A group homomorphism in reindex-and-scale normal form: one index rule per
// target block, values multiplied by the integer ratio of the units. A
// target unit not divisible by the unit of the block it reads makes the map
// miss the unit, which is rejected.
class LuHom {
 public:
  LuHom(LuSignature source, LuSignature target, std::vector<IndexRule> rules);

  static LuHom identity(const LuSignature& sig);

  const LuSignature& source() const { return *source_; }
  const LuSignature& target() const { return *target_; }
  const std::vector<IndexRule>& rules() const { return rules_; }
  const std::vector<long long>& scales() const { return scales_; }

  LuElement apply(const LuElement& g) const;

 private:
  std::shared_ptr<const LuSignature> source_;
  std::shared_ptr<const LuSignature> target_;
  std::vector<IndexRule> rules_;
  std::vector<long long> scales_;
};

// Restriction of a group homomorphism to the unit intervals, as a map of
// chain products with the same index rules.
ProductHom gamma_hom(const LuHom& f);

}  // namespace mvf
