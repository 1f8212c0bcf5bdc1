#include "mvf/hom.hpp"

#include <algorithm>

namespace mvf {

namespace {

// Value-identity maps a factor into another exactly when every carrier value
// of the source factor lies in the target factor.
bool value_identity_embeds(const FactorKind& from, const FactorKind& to) {
  if (to.is_unit_interval()) return true;
  if (from.is_unit_interval()) return false;
  return (to.chain_size() - 1) % (from.chain_size() - 1) == 0;
}

void require_algebraic(const ProductHom& h, const char* what) {
  if (h.source().has_unit_interval() || h.target().has_unit_interval())
    throw NotAlgebraicSignature(std::string(what) +
                                " requires chain products on both sides (no unit-interval factors)");
}

// Structural criterion shared by coherence and preservation of maximal
// compacts: every infinite target block must copy coordinates one-to-one,
// otherwise a single compact source coordinate spreads onto infinitely many
// target coordinates.
bool infinite_blocks_copy_indexwise(const ProductHom& h) {
  for (std::size_t tb = 0; tb < h.target().block_count(); ++tb)
    if (!h.target().blocks()[tb].mult.is_finite() &&
        h.rules()[tb].kind != IndexRule::Kind::SameIndex)
      return false;
  return true;
}

// Coordinates every probe family must exercise: the first coordinates of each
// source block plus everything a constant rule or override reads.
std::vector<CoordRef> probe_coords(const ProductHom& h) {
  std::vector<CoordRef> out;
  for (std::size_t b = 0; b < h.source().block_count(); ++b) out.push_back({b, 0});
  for (const IndexRule& r : h.rules())
    if (r.kind == IndexRule::Kind::ConstIndex) out.push_back({r.source_block, r.source_index});
  for (const auto& [tc, sc] : h.overrides()) out.push_back(sc);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Deterministic compact probes: characteristic functions and coatom spikes on
// the exercised coordinates.
std::vector<Element> compact_probes(const ProductHom& h) {
  const Signature& src = h.source();
  std::vector<Element> out;
  Element zero = Element::zero(src);
  out.push_back(zero);
  Element all = zero;
  for (const CoordRef& c : probe_coords(h)) {
    const Block& blk = src.blocks()[c.first];
    int n = blk.kind.chain_size();
    out.push_back(zero.with_coord(c.first, c.second, Rat(1)));
    if (n > 2) out.push_back(zero.with_coord(c.first, c.second, Rat(n - 2, n - 1)));
    all = all.with_coord(c.first, c.second, Rat(1));
  }
  out.push_back(all);
  return out;
}

}  // namespace

ProductHom::ProductHom(Signature source, Signature target, std::vector<IndexRule> rules,
                       std::map<CoordRef, CoordRef> overrides)
    : source_(std::make_shared<const Signature>(std::move(source))),
      target_(std::make_shared<const Signature>(std::move(target))),
      rules_(std::move(rules)),
      overrides_(std::move(overrides)) {
  if (rules_.size() != target_->block_count())
    throw BadParameter("expected one index rule per target block");
  for (std::size_t tb = 0; tb < rules_.size(); ++tb) {
    const IndexRule& r = rules_[tb];
    if (r.source_block >= source_->block_count())
      throw BadParameter("index rule refers to missing source block " +
                         std::to_string(r.source_block));
    const Block& sblk = source_->blocks()[r.source_block];
    const Block& tblk = target_->blocks()[tb];
    if (!value_identity_embeds(sblk.kind, tblk.kind))
      throw BadParameter("no value-preserving homomorphism from source block " +
                         std::to_string(r.source_block) + " into target block " +
                         std::to_string(tb));
    if (r.kind == IndexRule::Kind::SameIndex) {
      bool fits = !tblk.mult.is_finite()
                      ? !sblk.mult.is_finite()
                      : (!sblk.mult.is_finite() || tblk.mult.count() <= sblk.mult.count());
      if (!fits)
        throw BadParameter("target block " + std::to_string(tb) +
                           " has more coordinates than source block " +
                           std::to_string(r.source_block));
    } else if (!sblk.mult.contains_index(r.source_index)) {
      throw BadParameter("constant rule reads missing source coordinate");
    }
  }
  for (const auto& [tc, sc] : overrides_) {
    if (tc.first >= target_->block_count() ||
        !target_->blocks()[tc.first].mult.contains_index(tc.second))
      throw BadParameter("override writes to a missing target coordinate");
    if (sc.first >= source_->block_count() ||
        !source_->blocks()[sc.first].mult.contains_index(sc.second))
      throw BadParameter("override reads a missing source coordinate");
    if (!value_identity_embeds(source_->blocks()[sc.first].kind, target_->blocks()[tc.first].kind))
      throw BadParameter("override connects incompatible factors");
  }
}

ProductHom ProductHom::identity(const Signature& sig) {
  std::vector<IndexRule> rules(sig.block_count());
  for (std::size_t b = 0; b < rules.size(); ++b)
    rules[b] = IndexRule{IndexRule::Kind::SameIndex, b, 0};
  return ProductHom(sig, sig, std::move(rules));
}

CoordRef ProductHom::preimage(std::size_t tblock, std::uint64_t tindex) const {
  auto it = overrides_.find({tblock, tindex});
  if (it != overrides_.end()) return it->second;
  const IndexRule& r = rules_[tblock];
  if (r.kind == IndexRule::Kind::SameIndex) return {r.source_block, tindex};
  return {r.source_block, r.source_index};
}

Element ProductHom::apply(const Element& x) const {
  if (!(x.sig() == *source_)) throw SignatureMismatch("element does not live in the source algebra");
  std::vector<Element::BlockValues> values(target_->block_count());
  for (std::size_t tb = 0; tb < values.size(); ++tb) {
    const IndexRule& r = rules_[tb];
    auto& bv = values[tb];
    if (r.kind == IndexRule::Kind::SameIndex) {
      const auto& src = x.blocks()[r.source_block];
      bv.def = src.def;
      for (const auto& [i, v] : src.exceptions)
        if (target_->blocks()[tb].mult.contains_index(i)) bv.exceptions.emplace_back(i, v);
    } else {
      bv.def = x.at(r.source_block, r.source_index);
    }
  }
  for (const auto& [tc, sc] : overrides_) {
    auto& exc = values[tc.first].exceptions;
    Rat v = x.at(sc.first, sc.second);
    auto it = std::lower_bound(exc.begin(), exc.end(), tc.second,
                               [](const auto& p, std::uint64_t i) { return p.first < i; });
    if (it != exc.end() && it->first == tc.second)
      it->second = v;
    else
      exc.insert(it, {tc.second, v});
  }
  return Element::make(target_, std::move(values));
}

CompletenessReport is_complete(const ProductHom& h, std::uint64_t bound) {
  CompletenessReport r;
  r.complete = true;
  r.note =
      "every target coordinate reads exactly one source coordinate, so the map "
      "computes pointwise suprema and preserves arbitrary joins";
  if (h.source().fully_finite()) {
    // The exhaustive cross-check is quadratic in the carrier, so it is
    // capped well below the general enumeration bound.
    std::uint64_t n = 0;
    try {
      n = h.source().carrier_size(std::min<std::uint64_t>(bound, 256));
    } catch (const Error&) {
      return r;
    }
    std::vector<Element> xs = enumerate_elements(h.source(), n);
    for (const Element& x : xs)
      for (const Element& y : xs) {
        if (!(h.apply(join(x, y)) == join(h.apply(x), h.apply(y))) ||
            !(h.apply(meet(x, y)) == meet(h.apply(x), h.apply(y))))
          throw PropertyCheckFailure("join preservation failed on an enumerated pair");
      }
    r.exhaustive = true;
    r.note += "; verified exhaustively on " + std::to_string(n) + " elements";
  }
  return r;
}

bool is_coherent_map(const ProductHom& h) {
  require_algebraic(h, "coherence");
  bool structural = infinite_blocks_copy_indexwise(h);
  // Cross-check against actual images of compact probes; the probe family
  // covers every constant-read coordinate, so it separates the two outcomes.
  bool probes_ok = true;
  for (const Element& x : compact_probes(h)) {
    if (!is_compact(x).compact) throw PropertyCheckFailure("probe generator produced a non-compact");
    if (!is_compact(h.apply(x)).compact) probes_ok = false;
  }
  if (structural != probes_ok)
    throw PropertyCheckFailure("structural coherence criterion contradicts a compact probe");
  return structural;
}

bool preserves_maximal_compact(const ProductHom& h) {
  require_algebraic(h, "maximal-compact preservation");
  bool structural = infinite_blocks_copy_indexwise(h);

  bool probes_ok = true;
  if (h.source().index_set_finite()) {
    // The unique maximal compact is the top element.
    probes_ok = is_chi_of_finite_set(h.apply(Element::one(h.source())));
  } else {
    // Maximal compacts are characteristic functions of finite sets; probe the
    // empty set, singletons on every exercised coordinate, and their union.
    std::vector<Element> chis;
    Element zero = Element::zero(h.source());
    chis.push_back(zero);
    Element all = zero;
    for (const CoordRef& c : probe_coords(h)) {
      chis.push_back(zero.with_coord(c.first, c.second, Rat(1)));
      all = all.with_coord(c.first, c.second, Rat(1));
    }
    chis.push_back(all);
    for (const Element& chi : chis)
      if (!is_chi_of_finite_set(h.apply(chi))) probes_ok = false;
  }
  if (structural != probes_ok)
    throw PropertyCheckFailure(
        "structural maximal-compact criterion contradicts a characteristic-function probe");
  return structural;
}

CoherenceEquivalenceReport coherence_equivalence(const ProductHom& h) {
  CoherenceEquivalenceReport r;
  r.coherent = is_coherent_map(h);
  r.complete = is_complete(h).complete;
  r.preserves_max_compact = preserves_maximal_compact(h);
  r.equivalent = r.coherent == (r.complete && r.preserves_max_compact);
  if (!r.coherent || !r.preserves_max_compact) {
    // A constant rule on an infinite target block spreads one source
    // coordinate over infinitely many target coordinates, so the spike at
    // that coordinate is a compact element with a non-compact image.
    for (std::size_t tb = 0; tb < h.target().block_count(); ++tb) {
      const IndexRule& rule = h.rules()[tb];
      if (h.target().blocks()[tb].mult.is_finite() ||
          rule.kind == IndexRule::Kind::SameIndex)
        continue;
      Element spike = Element::zero(h.source())
                          .with_coord(rule.source_block, rule.source_index, Rat(1));
      if (is_compact(spike).compact && !is_compact(h.apply(spike)).compact) {
        r.counterexample = spike;
        break;
      }
    }
  }
  return r;
}

}  // namespace mvf
