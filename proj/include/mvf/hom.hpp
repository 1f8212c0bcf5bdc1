#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvf/element.hpp"
#include "mvf/frame.hpp"

namespace mvf {

// Where one target block reads its coordinates from. SameIndex copies
// coordinate i of a source block to coordinate i of the target block;
// ConstIndex reads one fixed source coordinate for the whole block.
struct IndexRule {
  enum class Kind { SameIndex, ConstIndex };
  Kind kind = Kind::SameIndex;
  std::size_t source_block = 0;
  std::uint64_t source_index = 0;  // used by ConstIndex only
  bool operator==(const IndexRule&) const = default;
};

using CoordRef = std::pair<std::size_t, std::uint64_t>;

// A homomorphism between standard-form products, described finitely: one
// IndexRule per target block plus finitely many per-coordinate overrides.
// Coordinates are carried by the identity on values, which is a chain
// embedding exactly when the source chain size n and target size m satisfy
// (n-1) | (m-1); construction checks this and rejects anything else.
class ProductHom {
 public:
  ProductHom(Signature source, Signature target, std::vector<IndexRule> rules,
             std::map<CoordRef, CoordRef> overrides = {});

  static ProductHom identity(const Signature& sig);

  const Signature& source() const { return *source_; }
  const Signature& target() const { return *target_; }
  const std::vector<IndexRule>& rules() const { return rules_; }
  const std::map<CoordRef, CoordRef>& overrides() const { return overrides_; }

  // Source coordinate feeding the given target coordinate.
  CoordRef preimage(std::size_t tblock, std::uint64_t tindex) const;

  Element apply(const Element& x) const;

 private:
  std::shared_ptr<const Signature> source_;
  std::shared_ptr<const Signature> target_;
  std::vector<IndexRule> rules_;
  std::map<CoordRef, CoordRef> overrides_;
};

// Join preservation. Coordinate-sampled maps of this shape preserve arbitrary
// joins because every target coordinate factors through one source
// coordinate; when the source is small enough the report also carries an
// exhaustive check of all finite joins of pairs.
struct CompletenessReport {
  bool complete = false;
  bool exhaustive = false;  // join preservation verified over the whole carrier
  std::string note;
};
CompletenessReport is_complete(const ProductHom& h, std::uint64_t bound = 4096);

// The map carries compact elements to compact elements. Requires both sides
// to be chain products (algebraic); rejects unit-interval signatures.
bool is_coherent_map(const ProductHom& h);

// The map carries characteristic functions of finite sets to characteristic
// functions of finite sets. Same signature requirements.
bool preserves_maximal_compact(const ProductHom& h);

// The two properties above evaluated independently, with the equivalence
// "coherent <=> complete and preserves maximal compacts" spelled out. When
// either property fails, counterexample holds a compact element whose image
// is not compact (equivalently, a finite characteristic function mapped to
// an infinite one).
struct CoherenceEquivalenceReport {
  bool coherent = false;
  bool complete = false;
  bool preserves_max_compact = false;
  bool equivalent = false;  // coherent == (complete && preserves_max_compact)
  std::optional<Element> counterexample;
};
CoherenceEquivalenceReport coherence_equivalence(const ProductHom& h);

}  // namespace mvf
