#include "mvf/nucleus.hpp"

#include <algorithm>
#include <set>

namespace mvf {

namespace {

// Parity materializes finite blocks coordinate by coordinate; cap the work.
constexpr std::uint64_t kParityBlockCap = 1u << 20;

std::string chain_list_text(const std::vector<std::size_t>& sizes) {
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) s += " x ";
    s += "L_" + std::to_string(sizes[i]);
  }
  return s.empty() ? "the one-element algebra" : s;
}

}  // namespace

NucleusSpec NucleusSpec::identity(const Signature& sig) {
  return NucleusSpec(NucleusKind::Identity, "identity", sig);
}

NucleusSpec NucleusSpec::constant_one(const Signature& sig) {
  return NucleusSpec(NucleusKind::ConstantOne, "constant-one", sig);
}

NucleusSpec NucleusSpec::double_pseudocomplement(const Signature& sig) {
  return NucleusSpec(NucleusKind::DoublePseudocomplement, "double-pseudocomplement", sig);
}

NucleusSpec NucleusSpec::threshold(const Signature& sig, const Rat& t0) {
  if (t0 < Rat(0) || Rat(1) < t0)
    throw BadParameter("threshold " + t0.str() + " lies outside [0,1]");
  for (std::size_t b = 0; b < sig.block_count(); ++b)
    if (!sig.blocks()[b].kind.contains(t0))
      throw BadParameter("threshold " + t0.str() + " is not a value of the factor in block " +
                         std::to_string(b));
  NucleusSpec s(NucleusKind::Threshold, "threshold(" + t0.str() + ")", sig);
  s.t0_ = t0;
  return s;
}

NucleusSpec NucleusSpec::parity(const Signature& sig) {
  NucleusSpec s(NucleusKind::Parity, "parity", sig);
  s.parity_start_.assign(sig.block_count(), 0);
  std::uint64_t next = 2;
  std::optional<std::size_t> first_tail;
  std::optional<std::size_t> second_tail;
  for (std::size_t b = 0; b < sig.block_count(); ++b) {
    const Block& blk = sig.blocks()[b];
    if (blk.kind.is_unit_interval())
      throw BadSignatureForNucleus("parity acts on chain products only");
    if (blk.mult.is_finite()) {
      if (first_tail)
        throw BadSignatureForNucleus("parity needs all finite blocks before the infinite ones");
      if (blk.mult.count() > kParityBlockCap)
        throw CarrierTooLarge("parity block too large to relabel coordinate by coordinate");
      s.parity_start_[b] = next;
      next += blk.mult.count();
    } else if (!first_tail) {
      first_tail = b;
    } else if (!second_tail) {
      second_tail = b;
    } else {
      throw BadSignatureForNucleus("parity supports at most two infinite blocks");
    }
  }
  if (first_tail && !second_tail)
    throw BadSignatureForNucleus(
        "parity needs infinite blocks in pairs: one carrying the remaining even labels, one the "
        "remaining odd labels");
  if (first_tail) {
    // The first tail takes labels next, next+2, ...; the second the rest.
    if (next % 2 == 0) {
      s.even_tail_ = first_tail;
      s.odd_tail_ = second_tail;
    } else {
      s.even_tail_ = second_tail;
      s.odd_tail_ = first_tail;
    }
  }
  return s;
}

NucleusSpec NucleusSpec::halving(const Signature& sig) {
  for (const Block& blk : sig.blocks())
    if (!blk.kind.is_chain() || blk.kind.chain_size() % 2 == 0 || blk.kind.chain_size() < 3)
      throw BadSignatureForNucleus("halving needs every factor to be an odd chain L_{2n+1}");
  return NucleusSpec(NucleusKind::Halving, "halving", sig);
}

NucleusSpec NucleusSpec::ceiling(const Signature& sig) {
  return NucleusSpec(NucleusKind::Ceiling, "ceiling", sig);
}

NucleusSpec NucleusSpec::radical(const Signature& sig) {
  for (const Block& blk : sig.blocks())
    if (!blk.kind.is_chain())
      throw BadSignatureForNucleus("the radical map is defined on chain products only");
  return NucleusSpec(NucleusKind::Radical, "radical", sig);
}

NucleusSpec NucleusSpec::table(const Signature& sig,
                               std::vector<std::pair<Element, Element>> graph) {
  std::uint64_t n = sig.carrier_size(kDefaultEnumBound);
  NucleusSpec s(NucleusKind::Table, "table", sig);
  for (auto& [x, jx] : graph) {
    if (!(x.sig() == sig) || !(jx.sig() == sig))
      throw BadParameter("table entries must live in the stated algebra");
    if (!s.table_.emplace(x, jx).second) throw BadParameter("table defines an element twice");
  }
  if (s.table_.size() != n)
    throw BadParameter("table covers " + std::to_string(s.table_.size()) + " of " +
                       std::to_string(n) + " elements");
  return s;
}

bool NucleusSpec::parity_label_odd(std::size_t block, std::uint64_t index) const {
  if (even_tail_ && block == *even_tail_) return false;
  if (odd_tail_ && block == *odd_tail_) return true;
  return (parity_start_[block] + index) % 2 == 1;
}

Rat NucleusSpec::coord_map(std::size_t block, std::uint64_t index, const Rat& v) const {
  switch (kind_) {
    case NucleusKind::Identity:
      return v;
    case NucleusKind::ConstantOne:
      return Rat(1);
    case NucleusKind::DoublePseudocomplement:
    case NucleusKind::Ceiling:
      return v == Rat(0) ? Rat(0) : Rat(1);
    case NucleusKind::Threshold:
      return max(v, *t0_);
    case NucleusKind::Parity:
      return parity_label_odd(block, index) ? Rat(1) : v;
    case NucleusKind::Halving: {
      long long d = sig_->blocks()[block].kind.chain_size() - 1;  // = 2n
      long long k = v.num() * (d / v.den());
      if (k % 2 == 1) ++k;
      return Rat(k, d);
    }
    case NucleusKind::Radical: {
      int n = sig_->blocks()[block].kind.chain_size();
      return v == Rat(1) ? Rat(1) : Rat(n - 2, n - 1);
    }
    case NucleusKind::Table:
      throw BadParameter("table nuclei have no per-coordinate action");
  }
  throw BadParameter("unhandled nucleus kind");
}

Element NucleusSpec::apply(const Element& x) const {
  if (!(x.sig() == *sig_))
    throw SignatureMismatch("element does not live in the nucleus algebra");
  switch (kind_) {
    case NucleusKind::Identity:
      return x;
    case NucleusKind::ConstantOne:
      return Element::one(*sig_);
    case NucleusKind::DoublePseudocomplement:
      // Deliberately routed through the pseudocomplement twice; coord_map
      // carries the closed form, and the two must agree.
      return pseudocomplement(pseudocomplement(x));
    case NucleusKind::Parity: {
      std::vector<Element::BlockValues> values = x.blocks();
      for (std::size_t b = 0; b < values.size(); ++b) {
        if (even_tail_ && b == *even_tail_) continue;
        if (odd_tail_ && b == *odd_tail_) {
          values[b].def = Rat(1);
          values[b].exceptions.clear();
          continue;
        }
        // Finite block: odd labels go to 1, even labels are kept.
        std::uint64_t m = sig_->blocks()[b].mult.count();
        Element::BlockValues out;
        out.def = values[b].def;
        std::size_t e = 0;
        for (std::uint64_t i = 0; i < m; ++i) {
          Rat v = values[b].def;
          if (e < values[b].exceptions.size() && values[b].exceptions[e].first == i)
            v = values[b].exceptions[e++].second;
          if (parity_label_odd(b, i)) v = Rat(1);
          if (!(v == out.def)) out.exceptions.emplace_back(i, v);
        }
        values[b] = std::move(out);
      }
      return Element::make(sig_, std::move(values));
    }
    case NucleusKind::Table: {
      auto it = table_.find(x);
      if (it == table_.end()) throw BadParameter("table nucleus applied outside its graph");
      return it->second;
    }
    default:
      return detail::map_blockwise(
          x, [&](std::size_t b, const Rat& v) { return coord_map(b, 0, v); });
  }
}

NucleusSpec builtin_nucleus(const std::string& kind_name, const Signature& sig,
                            const std::optional<Rat>& param) {
  if (kind_name == "threshold") {
    if (!param) throw BadParameter("threshold needs a rational parameter");
    return NucleusSpec::threshold(sig, *param);
  }
  if (param) throw BadParameter("nucleus kind '" + kind_name + "' takes no parameter");
  if (kind_name == "identity") return NucleusSpec::identity(sig);
  if (kind_name == "constant-one") return NucleusSpec::constant_one(sig);
  if (kind_name == "double-pseudocomplement") return NucleusSpec::double_pseudocomplement(sig);
  if (kind_name == "parity") return NucleusSpec::parity(sig);
  if (kind_name == "halving") return NucleusSpec::halving(sig);
  if (kind_name == "ceiling") return NucleusSpec::ceiling(sig);
  if (kind_name == "radical") return NucleusSpec::radical(sig);
  throw BadParameter(
      "unknown nucleus kind '" + kind_name +
      "' (expected identity, constant-one, double-pseudocomplement, threshold, parity, halving, "
      "ceiling or radical)");
}

namespace {

// Compacts vanish on unit-interval coordinates, so an inductive coordinatewise
// map must act as a constant there; a non-constant action yields an exact
// counterexample (a single interval spike has only 0 among the compacts below
// it).
Ternary inductive_coordinatewise(const NucleusSpec& spec, Sampler& smp) {
  const Signature& sig = spec.algebra();
  for (std::size_t b = 0; b < sig.block_count(); ++b) {
    const Block& blk = sig.blocks()[b];
    if (!blk.kind.is_unit_interval()) continue;
    Rat base = spec.coord_map(b, 0, Rat(0));
    std::vector<Rat> probes = {Rat(1),    Rat(1, 2), Rat(1, 3),  Rat(2, 3),
                               Rat(1, 7), Rat(6, 7), Rat(11, 12)};
    for (int s = 0; s < 32; ++s) probes.push_back(smp.factor_value(blk.kind));
    for (const Rat& v : probes)
      if (!(spec.coord_map(b, 0, v) == base))
        return Ternary::no("the action on the unit-interval factor of block " + std::to_string(b) +
                           " separates 0 from " + v.str() +
                           ", but every compact element vanishes there");
  }
  return Ternary::yes(
      "coordinatewise monotone action, constant on unit-interval factors: singleton compacts "
      "below x already realize j(x)");
}

std::string fixed_points_text_for(const NucleusSpec& spec) {
  switch (spec.kind()) {
    case NucleusKind::Identity:
      return "every element";
    case NucleusKind::ConstantOne:
      return "{1}";
    case NucleusKind::DoublePseudocomplement:
    case NucleusKind::Ceiling:
      return "the 0/1-valued elements (the Boolean center)";
    case NucleusKind::Threshold:
      return "elements pointwise above " + spec.threshold_value()->str();
    case NucleusKind::Parity:
      return "elements equal to 1 on every odd-labeled coordinate";
    case NucleusKind::Halving:
      return "elements with even numerators, one subchain L_{n+1} per factor L_{2n+1}";
    case NucleusKind::Radical:
      return "elements whose coordinates are 1 or the coatom of their chain";
    case NucleusKind::Table:
      return "the fixed points of the table";
  }
  return "";
}

}  // namespace

NucleusClassification classify_nucleus(const NucleusSpec& spec, const CheckOptions& opt) {
  const Signature& sig = spec.algebra();
  NucleusClassification c;
  Element zero = Element::zero(sig);
  c.dense = spec.apply(zero).is_zero();

  bool enumerable = false;
  std::uint64_t n = 0;
  if (sig.fully_finite()) {
    try {
      n = sig.carrier_size(opt.enum_bound);
      enumerable = true;
    } catch (const Error&) {
    }
  }

  if (enumerable) {
    std::vector<Element> xs = enumerate_elements(sig, opt.enum_bound);
    std::vector<Element> jx;
    jx.reserve(xs.size());
    for (const Element& x : xs) jx.push_back(spec.apply(x));

    c.extensive = true;
    c.idempotent = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!leq(xs[i], jx[i])) c.extensive = false;
      if (!(spec.apply(jx[i]) == jx[i])) c.idempotent = false;
    }

    bool pairs_exhaustive = n <= opt.pair_budget / std::max<std::uint64_t>(n, 1);
    c.monotone = true;
    c.meet_law = true;
    if (pairs_exhaustive) {
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i; j < xs.size(); ++j) {
          if (!(spec.apply(meet(xs[i], xs[j])) == meet(jx[i], jx[j]))) c.meet_law = false;
          if (leq(xs[i], xs[j]) && !leq(jx[i], jx[j])) c.monotone = false;
          if (leq(xs[j], xs[i]) && !leq(jx[j], jx[i])) c.monotone = false;
        }
    } else {
      std::mt19937_64 rng(opt.seed);
      std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
      for (int s = 0; s < opt.samples; ++s) {
        std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        if (!(spec.apply(meet(xs[i], xs[j])) == meet(jx[i], jx[j]))) c.meet_law = false;
        if (leq(xs[i], xs[j]) && !leq(jx[i], jx[j])) c.monotone = false;
        if (leq(xs[j], xs[i]) && !leq(jx[j], jx[i])) c.monotone = false;
      }
    }

    if (pairs_exhaustive) {
      bool ok = true;
      for (std::size_t i = 0; i < xs.size() && ok; ++i) {
        Element acc = zero;
        for (std::size_t j = 0; j < xs.size(); ++j)
          if (leq(xs[j], xs[i])) acc = join(acc, jx[j]);
        if (!(acc == jx[i])) ok = false;
      }
      c.inductive =
          ok ? Ternary::yes("join of j over the full down-set matches j(x) for every x")
             : Ternary::no("some x has j(x) strictly above the join of j over the elements below it");
    } else if (spec.coordinatewise()) {
      c.inductive = Ternary::yes(
          "coordinatewise monotone map on a finite chain product: singleton compacts below x "
          "already realize j(x)");
    } else {
      c.inductive =
          Ternary::unknown("carrier too large for the down-set check and the map has no "
                           "per-coordinate form");
    }

    std::vector<Element> fixed;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (jx[i] == xs[i]) fixed.push_back(xs[i]);
    std::set<Element, ElementLess> fset(fixed.begin(), fixed.end());
    c.mv_type = true;
    for (const Element& f : fixed)
      if (!fset.count(neg(f))) c.mv_type = false;
    if (c.mv_type) {
      std::uint64_t fn = fixed.size();
      if (fn <= opt.pair_budget / std::max<std::uint64_t>(fn, 1)) {
        for (std::size_t i = 0; i < fixed.size() && c.mv_type; ++i)
          for (std::size_t j = i; j < fixed.size(); ++j)
            if (!fset.count(oplus(fixed[i], fixed[j]))) {
              c.mv_type = false;
              break;
            }
      } else {
        std::mt19937_64 rng(opt.seed + 1);
        std::uniform_int_distribution<std::size_t> pick(0, fixed.size() - 1);
        for (int s = 0; s < opt.samples; ++s)
          if (!fset.count(oplus(fixed[pick(rng)], fixed[pick(rng)]))) c.mv_type = false;
      }
    }

    c.exhaustive = pairs_exhaustive;
    c.method = pairs_exhaustive
                   ? "exhaustive over " + std::to_string(n) + " elements"
                   : "enumerated carrier of " + std::to_string(n) +
                         " elements with sampled binary laws (seed " + std::to_string(opt.seed) +
                         ")";
    c.fixed_points_text = std::to_string(fixed.size()) + " fixed points";
    c.fixed_points = std::move(fixed);
    return c;
  }

  // Infinite carrier: seeded sampling for the laws, structure for the rest.
  Sampler smp(opt.seed);
  c.extensive = true;
  c.idempotent = true;
  c.monotone = true;
  c.meet_law = true;
  for (int s = 0; s < opt.samples; ++s) {
    Element x = smp.element(sig);
    Element y = smp.element(sig);
    Element jxv = spec.apply(x);
    Element jyv = spec.apply(y);
    if (!leq(x, jxv)) c.extensive = false;
    if (!(spec.apply(jxv) == jxv)) c.idempotent = false;
    Element m = meet(x, y);
    if (!(spec.apply(m) == meet(jxv, jyv))) c.meet_law = false;
    Element jm = spec.apply(m);
    if (!leq(jm, jxv) || !leq(jm, jyv)) c.monotone = false;
  }

  c.inductive = spec.coordinatewise()
                    ? inductive_coordinatewise(spec, smp)
                    : Ternary::unknown(
                          "no decision procedure: the carrier is infinite and the map has no "
                          "per-coordinate form");

  std::vector<Element> fixed = {spec.apply(zero), spec.apply(Element::one(sig))};
  for (int s = 0; s < opt.samples; ++s) fixed.push_back(spec.apply(smp.element(sig)));
  c.mv_type = true;
  for (const Element& f : fixed)
    if (!(spec.apply(neg(f)) == neg(f))) c.mv_type = false;
  if (c.mv_type) {
    std::uniform_int_distribution<std::size_t> pick(0, fixed.size() - 1);
    for (int s = 0; s < opt.samples; ++s) {
      Element o = oplus(fixed[pick(smp.rng())], fixed[pick(smp.rng())]);
      if (!(spec.apply(o) == o)) c.mv_type = false;
    }
  }

  c.exhaustive = false;
  c.method = "sampled (" + std::to_string(opt.samples) + " draws, seed " +
             std::to_string(opt.seed) + ")";
  c.fixed_points_text = fixed_points_text_for(spec);
  return c;
}

NuclearAlgebra nuclear_as_algebra(const NucleusSpec& spec, const CheckOptions& opt) {
  const Signature& sig = spec.algebra();
  if (!sig.fully_finite())
    throw InfiniteCarrier("the image algebra is materialized only for finite carriers");
  sig.carrier_size(opt.enum_bound);  // throws CarrierTooLarge if oversized

  NucleusClassification cls = classify_nucleus(spec, opt);
  std::string failed;
  if (!cls.is_nucleus()) failed += " nucleus";
  if (!cls.mv_type) failed += " mv-type";
  if (!cls.inductive.is_true()) failed += " inductive";
  if (!failed.empty()) throw PreconditionFailed("required flags not established:" + failed);

  NuclearAlgebra out;
  std::vector<Element> xs = enumerate_elements(sig, opt.enum_bound);
  std::set<Element, ElementLess> fset;
  for (const Element& x : xs) {
    Element j = spec.apply(x);
    if (j == x) fset.insert(x);
  }
  out.fixed_points.assign(fset.begin(), fset.end());
  const std::vector<Element>& fixed = out.fixed_points;

  out.joins_agree = true;
  std::uint64_t fn = fixed.size();
  bool fpairs = fn <= opt.pair_budget / std::max<std::uint64_t>(fn, 1);
  if (fpairs) {
    for (std::size_t i = 0; i < fixed.size(); ++i)
      for (std::size_t j = i; j < fixed.size(); ++j)
        if (!fset.count(join(fixed[i], fixed[j]))) out.joins_agree = false;
  } else {
    std::mt19937_64 rng(opt.seed + 2);
    std::uniform_int_distribution<std::size_t> pick(0, fixed.size() - 1);
    for (int s = 0; s < opt.samples; ++s)
      if (!fset.count(join(fixed[pick(rng)], fixed[pick(rng)]))) out.joins_agree = false;
  }

  out.algebraic = true;
  for (const Element& x : fixed) {
    Element acc = Element::zero(sig);
    bool first = true;
    for (const Element& a : fixed)
      if (leq(a, x)) {
        acc = first ? a : join(acc, a);
        first = false;
      }
    if (first || !(acc == x)) out.algebraic = false;
  }

  // Image of the ambient compacts versus the compacts of the image; in a
  // finite lattice everything is compact, so the image side is all of fset.
  std::set<Element, ElementLess> jk;
  for (const Element& x : xs)
    if (is_compact(x).compact) jk.insert(spec.apply(x));
  out.compacts_map_onto = jk == fset;

  // Boolean center of the image, its atoms, and the chain decomposition.
  std::vector<Element> bc;
  for (const Element& f : fixed)
    if (oplus(f, f) == f) bc.push_back(f);
  Element bottom = spec.apply(Element::zero(sig));
  for (const Element& e : bc) {
    if (e == bottom) continue;
    bool minimal = true;
    for (const Element& e2 : bc)
      if (!(e2 == bottom) && !(e2 == e) && leq(e2, e)) minimal = false;
    if (minimal) out.atoms.push_back(e);
  }

  std::vector<std::vector<Element>> chains;
  std::vector<std::size_t> sizes;
  for (const Element& e : out.atoms) {
    std::set<Element, ElementLess> cset;
    for (const Element& f : fixed) cset.insert(meet(f, e));
    std::vector<Element> chain(cset.begin(), cset.end());
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (std::size_t j = i + 1; j < chain.size(); ++j)
        if (!leq(chain[i], chain[j]) && !leq(chain[j], chain[i])) {
          out.recognized_text = "a Boolean atom slice is not totally ordered";
          return out;
        }
    std::sort(chain.begin(), chain.end(),
              [](const Element& a, const Element& b) { return leq(a, b) && !(a == b); });
    sizes.push_back(chain.size());
    chains.push_back(std::move(chain));
  }

  std::uint64_t prod = 1;
  for (std::size_t s : sizes) prod *= s;
  if (prod != fn || out.atoms.empty()) {
    out.recognized_text = "image does not factor through its Boolean atoms";
    return out;
  }

  // Positions of each fixed point along the atom slices must give an order
  // isomorphism onto the product of the slices.
  std::vector<std::map<Element, std::size_t, ElementLess>> pos(chains.size());
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t k = 0; k < chains[i].size(); ++k) pos[i].emplace(chains[i][k], k);
  std::vector<std::vector<std::size_t>> tuples(fixed.size());
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t f = 0; f < fixed.size(); ++f) {
    for (std::size_t i = 0; i < chains.size(); ++i)
      tuples[f].push_back(pos[i].at(meet(fixed[f], out.atoms[i])));
    if (!seen.insert(tuples[f]).second) {
      out.recognized_text = "atom coordinates do not separate the image";
      return out;
    }
  }
  bool order_iso = true;
  if (fpairs) {
    for (std::size_t f = 0; f < fixed.size() && order_iso; ++f)
      for (std::size_t g = 0; g < fixed.size(); ++g) {
        bool pointwise = true;
        for (std::size_t i = 0; i < chains.size(); ++i)
          if (tuples[f][i] > tuples[g][i]) pointwise = false;
        if (leq(fixed[f], fixed[g]) != pointwise) {
          order_iso = false;
          break;
        }
      }
  }
  if (!order_iso) {
    out.recognized_text = "atom coordinates do not respect the order";
    return out;
  }

  std::vector<Block> blocks;
  for (std::size_t s : sizes)
    blocks.push_back({FactorKind::chain(static_cast<int>(s)), Multiplicity::finite(1)});
  out.recognized = Signature(std::move(blocks));
  out.recognized_text = chain_list_text(sizes);
  return out;
}

}  // namespace mvf
