#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "mvf/rational.hpp"
#include "mvf/signature.hpp"

namespace mvf {

inline constexpr std::uint64_t kDefaultEnumBound = 1'000'000;

// An element of a product algebra, stored per block as a default value plus a
// finite sorted list of exceptional coordinates. Construction canonicalizes,
// so structural equality coincides with pointwise equality.
class Element {
 public:
  struct BlockValues {
    Rat def;
    std::vector<std::pair<std::uint64_t, Rat>> exceptions;  // sorted by index
    bool operator==(const BlockValues&) const = default;
  };

  static Element constant(const Signature& sig, const Rat& v);
  static Element zero(const Signature& sig) { return constant(sig, Rat(0)); }
  static Element one(const Signature& sig) { return constant(sig, Rat(1)); }
  static Element make(const Signature& sig, std::vector<BlockValues> values);
  static Element make(std::shared_ptr<const Signature> sig, std::vector<BlockValues> values);

  const Signature& sig() const { return *sig_; }
  const std::shared_ptr<const Signature>& sig_ptr() const { return sig_; }
  const std::vector<BlockValues>& blocks() const { return blocks_; }

  Rat at(std::size_t block, std::uint64_t index) const;
  // Copy with one coordinate replaced.
  Element with_coord(std::size_t block, std::uint64_t index, const Rat& v) const;

  bool is_constant(const Rat& v) const;
  bool is_zero() const { return is_constant(Rat(0)); }
  bool is_one() const { return is_constant(Rat(1)); }
  // True when only finitely many coordinates are nonzero.
  bool finite_support() const;
  // All coordinates lie in {0, 1}.
  bool boolean_valued() const;
  // Nonzero coordinates, available only under finite_support().
  std::vector<std::pair<std::pair<std::size_t, std::uint64_t>, Rat>> support() const;

  bool operator==(const Element& o) const {
    return blocks_ == o.blocks_ && (sig_ == o.sig_ || *sig_ == *o.sig_);
  }

 private:
  Element(std::shared_ptr<const Signature> sig, std::vector<BlockValues> blocks)
      : sig_(std::move(sig)), blocks_(std::move(blocks)) {}

  std::shared_ptr<const Signature> sig_;
  std::vector<BlockValues> blocks_;
};

// Deterministic total order on elements of one algebra, for use in sets/maps.
struct ElementLess {
  bool operator()(const Element& a, const Element& b) const;
};

namespace detail {

void require_same_signature(const Element& x, const Element& y);
Element::BlockValues zip_block(const Element::BlockValues& a, const Element::BlockValues& b,
                               const std::function<Rat(const Rat&, const Rat&)>& f);

// Pointwise binary operation; f must map carrier values back into the factor
// carrier for every factor it is applied to.
template <class F>
Element zip(const Element& x, const Element& y, F f) {
  require_same_signature(x, y);
  std::vector<Element::BlockValues> out;
  out.reserve(x.blocks().size());
  for (std::size_t b = 0; b < x.blocks().size(); ++b)
    out.push_back(zip_block(x.blocks()[b], y.blocks()[b], f));
  return Element::make(x.sig_ptr(), std::move(out));
}

// Pointwise unary operation; the map may depend on the block (not the index).
template <class F>
Element map_blockwise(const Element& x, F f) {
  std::vector<Element::BlockValues> out;
  out.reserve(x.blocks().size());
  for (std::size_t b = 0; b < x.blocks().size(); ++b) {
    const auto& bv = x.blocks()[b];
    Element::BlockValues r;
    r.def = f(b, bv.def);
    for (const auto& [i, v] : bv.exceptions) r.exceptions.emplace_back(i, f(b, v));
    out.push_back(std::move(r));
  }
  return Element::make(x.sig_ptr(), std::move(out));
}

}  // namespace detail

// Monoid and order structure. oplus/neg are primitive; join_mv/meet_mv are
// the derived terms and must agree with the pointwise max/min.
Element oplus(const Element& x, const Element& y);
Element neg(const Element& x);
Element join(const Element& x, const Element& y);     // pointwise max
Element meet(const Element& x, const Element& y);     // pointwise min
Element join_mv(const Element& x, const Element& y);  // neg(neg(x) oplus y) oplus y
Element meet_mv(const Element& x, const Element& y);  // neg(join_mv(neg x, neg y))
bool leq(const Element& x, const Element& y);         // pointwise
bool leq_mv(const Element& x, const Element& y);      // neg(x) oplus y == 1

// All elements of a fully finite carrier, in a fixed odometer order starting
// from zero; throws for infinite carriers or when the size exceeds `bound`.
std::vector<Element> enumerate_elements(const Signature& sig,
                                        std::uint64_t bound = kDefaultEnumBound);

}  // namespace mvf
