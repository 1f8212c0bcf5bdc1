#include "mvf/frame.hpp"

#include <algorithm>

namespace mvf {

Element join_finite(const Signature& sig, std::span<const Element> xs) {
  Element acc = Element::zero(sig);
  for (const Element& x : xs) acc = join(acc, x);
  return acc;
}

Element meet_finite(const Signature& sig, std::span<const Element> xs) {
  Element acc = Element::one(sig);
  for (const Element& x : xs) acc = meet(acc, x);
  return acc;
}

Element pseudocomplement(const Element& x) {
  return detail::map_blockwise(
      x, [](std::size_t, const Rat& v) { return v == Rat(0) ? Rat(1) : Rat(0); });
}

bool in_boolean_center(const Element& x) { return x.boolean_valued(); }

bool in_boolean_center_by_idempotence(const Element& x) { return oplus(x, x) == x; }

Element ChainWitness::term(std::uint64_t n) const {
  if (n == 0) throw BadParameter("witness terms are indexed from 1");
  if (kind == Kind::RationalRamp) {
    // Same as the target except at one coordinate, which climbs toward the
    // limit along limit * n / (n + 1).
    Rat q = limit * Rat(static_cast<long long>(n), static_cast<long long>(n + 1));
    return target.with_coord(block, index, q);
  }
  // ExhaustFiniteSupport: truncate the designated infinite block to its first
  // n coordinates, zero beyond.
  std::vector<Element::BlockValues> values = target.blocks();
  auto& bv = values[block];
  Rat def = bv.def;
  std::vector<std::pair<std::uint64_t, Rat>> kept;
  for (const auto& [i, v] : bv.exceptions)
    if (i < n) kept.emplace_back(i, v);
  if (!(def == Rat(0))) {
    // Coordinates < n keep the old default; re-express with default 0.
    std::vector<std::pair<std::uint64_t, Rat>> full;
    std::size_t e = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      Rat v = def;
      if (e < kept.size() && kept[e].first == i) v = kept[e++].second;
      if (!(v == Rat(0))) full.emplace_back(i, v);
    }
    kept = std::move(full);
  }
  bv.def = Rat(0);
  bv.exceptions = std::move(kept);
  return Element::make(target.sig_ptr(), std::move(values));
}

CompactnessVerdict is_compact(const Element& x) {
  const Signature& sig = x.sig();
  for (std::size_t b = 0; b < sig.block_count(); ++b) {
    const Block& blk = sig.blocks()[b];
    const auto& bv = x.blocks()[b];
    if (blk.kind.is_unit_interval()) {
      // Any nonzero unit-interval coordinate admits a strictly increasing
      // rational ramp below it; find the smallest such index.
      std::optional<std::uint64_t> idx;
      if (bv.def == Rat(0)) {
        for (const auto& [i, v] : bv.exceptions)
          if (!(v == Rat(0))) {
            idx = i;
            break;
          }
      } else {
        // Nonzero default: the first index not masked by a zero exception.
        std::uint64_t i = 0;
        for (const auto& [j, v] : bv.exceptions) {
          if (j != i) break;
          if (!(v == Rat(0))) break;
          ++i;
        }
        if (blk.mult.contains_index(i) && !(x.at(b, i) == Rat(0))) idx = i;
      }
      if (idx) {
        Rat limit = x.at(b, *idx);
        ChainWitness w{ChainWitness::Kind::RationalRamp,
                       b,
                       *idx,
                       limit,
                       x,
                       x,
                       "target with coordinate (" + std::to_string(b) + "," +
                           std::to_string(*idx) + ") replaced by " + limit.str() + " * n/(n+1)"};
        return {false, std::move(w)};
      }
    } else if (!blk.mult.is_finite() && !(bv.def == Rat(0))) {
      // Infinite support: exhaust it with finite truncations.
      ChainWitness w{ChainWitness::Kind::ExhaustFiniteSupport,
                     b,
                     0,
                     Rat(0),
                     x,
                     x,
                     "target with block " + std::to_string(b) +
                         " truncated to its first n coordinates"};
      return {false, std::move(w)};
    }
  }
  return {true, std::nullopt};
}

WitnessCheck check_witness(const ChainWitness& w, std::uint64_t prefix_len) {
  WitnessCheck c;
  c.monotone = true;
  c.no_term_dominates = true;
  Element prev = w.term(1);
  if (leq(w.target, prev)) c.no_term_dominates = false;
  for (std::uint64_t n = 2; n <= prefix_len; ++n) {
    Element cur = w.term(n);
    if (!leq(prev, cur)) c.monotone = false;
    if (leq(w.target, cur)) c.no_term_dominates = false;
    prev = std::move(cur);
  }
  c.sup_dominates = leq(w.target, w.declared_sup);
  return c;
}

ElementSetDescription compact_elements(const Signature& sig, std::uint64_t bound) {
  ElementSetDescription d;
  d.contains = [](const Element& x) { return is_compact(x).compact; };
  bool interval = sig.has_unit_interval();
  bool chains = false;
  for (const auto& b : sig.blocks())
    if (b.kind.is_chain()) chains = true;

  if (!interval && sig.index_set_finite())
    d.text = "every element (finite product of finite chains)";
  else if (!interval)
    d.text = "elements of finite support (the direct sum of the chain factors)";
  else if (!chains)
    d.text = "{0}";
  else
    d.text = "elements of finite support vanishing on every unit-interval coordinate";

  if (sig.fully_finite()) {
    std::uint64_t n = 0;
    bool fits = true;
    try {
      n = sig.carrier_size(bound);
    } catch (const CarrierTooLarge&) {
      fits = false;
    }
    if (fits && n <= bound) d.materialized = enumerate_elements(sig, bound);
  }
  return d;
}

ElementSetDescription maximal_compact_elements(const Signature& sig, std::uint64_t bound) {
  ElementSetDescription d;
  bool interval = sig.has_unit_interval();
  bool chains = false;
  for (const auto& b : sig.blocks())
    if (b.kind.is_chain()) chains = true;

  if (interval && chains)
    throw NotAlgebraicSignature(
        "maximal compact elements are described only for chain products or pure interval powers");

  if (interval) {
    // The only compact element is 0, which is therefore maximal.
    d.text = "{0}";
    d.contains = [](const Element& x) { return x.is_zero(); };
    d.materialized = std::vector<Element>{Element::zero(sig)};
    return d;
  }

  if (sig.index_set_finite()) {
    d.text = "{1} (the top element, the characteristic function of the whole index set)";
    d.contains = [](const Element& x) { return x.is_one(); };
    d.materialized = std::vector<Element>{Element::one(sig)};
    return d;
  }

  d.text = "characteristic functions of finite subsets of the index set";
  d.contains = [](const Element& x) { return is_chi_of_finite_set(x); };
  (void)bound;
  return d;
}

bool is_chi_of_finite_set(const Element& x) {
  return x.boolean_valued() && x.finite_support();
}

bool way_below(const Element& x, const Element& y) {
  detail::require_same_signature(x, y);
  return join(y, pseudocomplement(x)).is_one();
}

bool is_regular_element(const Element& x) { return x.boolean_valued(); }

FrameClassification classify(const Signature& sig) {
  FrameClassification c;
  c.algebraic = !sig.has_unit_interval();
  c.coherent = sig.fully_finite();
  c.is_powerset_algebra = c.algebraic && sig.all_chains_of_size(2);
  c.regular = c.is_powerset_algebra;
  c.fip = true;
  return c;
}

}  // namespace mvf
