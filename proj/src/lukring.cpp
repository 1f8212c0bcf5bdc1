#include "mvf/lukring.hpp"

#include <algorithm>
#include <limits>

#include "mvf/frame.hpp"

namespace mvf {

namespace {

constexpr long long kScanModulusCap = 1 << 20;

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long checked_pow(long long p, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (std::numeric_limits<long long>::max() / p))
      throw BadParameter("chain ring modulus p^k overflows a 64-bit integer");
    r *= p;
  }
  return r;
}

// p-adic valuation of r within Z/p^k; the zero residue has full valuation k.
int valuation(long long r, long long p, int k) {
  if (r == 0) return k;
  int v = 0;
  while (r % p == 0) {
    r /= p;
    ++v;
  }
  return v;
}

void require_same_ring(const RingIdeal& a, const RingIdeal& b) {
  if (!(a.ring() == b.ring()))
    throw SignatureMismatch("ideal operation on ideals of different rings");
}

// Exponent of Ann((p^e)) in Z/p^k. Small moduli are scanned residue by
// residue; larger ones read the valuation of the annihilating generator,
// which names the same residue set.
int annihilator_exponent(long long p, int k, int e) {
  long long m = checked_pow(p, k);
  if (m <= kScanModulusCap) {
    long long g = (e == k) ? 0 : checked_pow(p, e);
    int best = k;
    for (long long r = 0; r < m; ++r)
      if ((r * g) % m == 0) best = std::min(best, valuation(r, p, k));
    return best;
  }
  return k - e;
}

}  // namespace

long long ChainRingFactor::modulus() const { return checked_pow(p, k); }

FiniteRing::FiniteRing(std::vector<ChainRingFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw BadParameter("a finite ring needs at least one chain factor");
  for (const ChainRingFactor& f : factors_) {
    if (!is_prime(f.p)) throw BadParameter("chain ring base " + std::to_string(f.p) + " is not prime");
    if (f.k < 1) throw BadParameter("chain ring exponent must be at least 1");
    checked_pow(f.p, f.k);
  }
}

std::uint64_t FiniteRing::ideal_count(std::uint64_t bound) const {
  std::uint64_t n = 1;
  for (const ChainRingFactor& f : factors_) {
    n *= static_cast<std::uint64_t>(f.k) + 1;
    if (n > bound)
      throw CarrierTooLarge("ideal lattice exceeds the enumeration bound of " +
                            std::to_string(bound));
  }
  return n;
}

std::string FiniteRing::describe() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + std::to_string(factors_[i].modulus());
  }
  return out;
}

RingIdeal::RingIdeal(FiniteRing ring, std::vector<int> exponents)
    : ring_(std::move(ring)), exponents_(std::move(exponents)) {
  if (exponents_.size() != ring_.factor_count())
    throw BadParameter("expected one generator exponent per ring factor");
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] < 0 || exponents_[i] > ring_.factors()[i].k)
      throw BadParameter("generator exponent out of range for factor " + std::to_string(i));
}

RingIdeal RingIdeal::zero(const FiniteRing& ring) {
  std::vector<int> e;
  for (const ChainRingFactor& f : ring.factors()) e.push_back(f.k);
  return RingIdeal(ring, std::move(e));
}

RingIdeal RingIdeal::whole(const FiniteRing& ring) {
  return RingIdeal(ring, std::vector<int>(ring.factor_count(), 0));
}

bool RingIdeal::contains(const RingIdeal& other) const {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

std::vector<long long> RingIdeal::generator() const {
  std::vector<long long> g;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const ChainRingFactor& f = ring_.factors()[i];
    g.push_back(exponents_[i] == f.k ? 0 : checked_pow(f.p, exponents_[i]));
  }
  return g;
}

std::string RingIdeal::generator_string() const {
  std::string out = "(";
  std::vector<long long> g = generator();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(g[i]);
  }
  return out + ")";
}

bool RingIdeal::operator==(const RingIdeal& other) const {
  return ring_ == other.ring_ && exponents_ == other.exponents_;
}

Signature ideal_lattice_signature(const FiniteRing& ring) {
  std::vector<Block> blocks;
  for (const ChainRingFactor& f : ring.factors())
    blocks.push_back({FactorKind::chain(f.k + 1), Multiplicity::finite(1)});
  return Signature(std::move(blocks));
}

Element ideal_to_element(const RingIdeal& ideal) {
  Signature sig = ideal_lattice_signature(ideal.ring());
  Element x = Element::zero(sig);
  for (std::size_t i = 0; i < ideal.exponents().size(); ++i) {
    int k = ideal.ring().factors()[i].k;
    x = x.with_coord(i, 0, Rat(k - ideal.exponents()[i], k));
  }
  return x;
}

RingIdeal element_to_ideal(const FiniteRing& ring, const Element& x) {
  Signature sig = ideal_lattice_signature(ring);
  if (!same_up_to_relabeling(x.sig(), sig))
    throw SignatureMismatch("element does not live on the ideal lattice of " + ring.describe());
  std::vector<int> e;
  for (std::size_t i = 0; i < ring.factor_count(); ++i) {
    int k = ring.factors()[i].k;
    Rat v = x.at(i, 0);
    Rat scaled = v * Rat(k);
    if (scaled.den() != 1)
      throw BadParameter("coordinate " + v.str() + " is not a multiple of 1/" + std::to_string(k));
    e.push_back(k - static_cast<int>(scaled.num()));
  }
  return RingIdeal(ring, std::move(e));
}

std::vector<RingIdeal> enumerate_ideals(const FiniteRing& ring, std::uint64_t bound) {
  ring.ideal_count(bound);
  std::vector<RingIdeal> out;
  std::vector<int> e(ring.factor_count(), 0);
  while (true) {
    out.push_back(RingIdeal(ring, e));
    std::size_t i = 0;
    for (; i < e.size(); ++i) {
      if (e[i] < ring.factors()[i].k) {
        ++e[i];
        break;
      }
      e[i] = 0;
    }
    if (i == e.size()) break;
  }
  return out;
}

RingIdeal annihilator(const RingIdeal& ideal) {
  std::vector<int> e;
  for (std::size_t i = 0; i < ideal.exponents().size(); ++i) {
    const ChainRingFactor& f = ideal.ring().factors()[i];
    e.push_back(annihilator_exponent(f.p, f.k, ideal.exponents()[i]));
  }
  return RingIdeal(ideal.ring(), std::move(e));
}

RingIdeal multiply_ideals(const RingIdeal& a, const RingIdeal& b) {
  require_same_ring(a, b);
  std::vector<int> e;
  for (std::size_t i = 0; i < a.exponents().size(); ++i) {
    const ChainRingFactor& f = a.ring().factors()[i];
    // The product of principal ideals is generated by the product of their
    // generators; reduce it mod p^k and read off its valuation.
    long long m = f.modulus();
    long long ga = (a.exponents()[i] == f.k) ? 0 : checked_pow(f.p, a.exponents()[i]);
    long long gb = (b.exponents()[i] == f.k) ? 0 : checked_pow(f.p, b.exponents()[i]);
    long long prod;
    if (ga != 0 && gb > std::numeric_limits<long long>::max() / ga)
      prod = checked_pow(f.p, std::min(a.exponents()[i] + b.exponents()[i], f.k)) % m;
    else
      prod = (ga * gb) % m;
    e.push_back(valuation(prod, f.p, f.k));
  }
  return RingIdeal(a.ring(), std::move(e));
}

RingIdeal oplus_ideals(const RingIdeal& a, const RingIdeal& b) {
  return annihilator(multiply_ideals(annihilator(a), annihilator(b)));
}

std::vector<RingIdeal> maximal_ideals(const FiniteRing& ring) {
  std::vector<RingIdeal> out;
  for (std::size_t i = 0; i < ring.factor_count(); ++i) {
    std::vector<int> e(ring.factor_count(), 0);
    e[i] = 1;
    out.push_back(RingIdeal(ring, std::move(e)));
  }
  // Cross-check on small lattices: nothing proper sits strictly above a
  // candidate, and every proper ideal sits below some candidate.
  std::uint64_t n = 1;
  bool small = true;
  for (const ChainRingFactor& f : ring.factors()) {
    n *= static_cast<std::uint64_t>(f.k) + 1;
    if (n > 4096) {
      small = false;
      break;
    }
  }
  if (small) {
    RingIdeal whole = RingIdeal::whole(ring);
    for (const RingIdeal& ideal : enumerate_ideals(ring, 4096)) {
      if (ideal == whole) continue;
      bool below_candidate = false;
      for (const RingIdeal& m : out) {
        if (m.contains(ideal)) below_candidate = true;
        if (ideal.contains(m) && !(ideal == m))
          throw PropertyCheckFailure("a proper ideal strictly contains a maximal-ideal candidate");
      }
      if (!below_candidate)
        throw PropertyCheckFailure("a proper ideal escapes every maximal-ideal candidate");
    }
  }
  return out;
}

RingIdeal radical_ideal(const RingIdeal& ideal) {
  // Intersect the maximal ideals containing I. Intersection takes the
  // pointwise maximum of generator exponents; no containing maximal ideal
  // (I = R) leaves the empty intersection R.
  std::vector<int> e(ideal.ring().factor_count(), 0);
  for (const RingIdeal& m : maximal_ideals(ideal.ring()))
    if (m.contains(ideal))
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(e[i], m.exponents()[i]);
  RingIdeal r(ideal.ring(), std::move(e));
  if (!r.contains(ideal))
    throw PropertyCheckFailure("radical does not contain its ideal");
  return r;
}

Element radical_on_frame(const Signature& sig, const Element& x) {
  return NucleusSpec::radical(sig).apply(x);
}

RingFrameOracleReport verify_ring_frame_oracle(const FiniteRing& ring, const CheckOptions& opts) {
  RingFrameOracleReport r;
  std::vector<RingIdeal> ideals = enumerate_ideals(ring, opts.enum_bound);
  std::vector<Element> elems;
  elems.reserve(ideals.size());
  for (const RingIdeal& ideal : ideals) elems.push_back(ideal_to_element(ideal));
  Signature sig = ideal_lattice_signature(ring);
  std::uint64_t n = ideals.size();
  r.ideal_total = n;
  r.pairs_exhaustive = n <= opts.pair_budget / std::max<std::uint64_t>(n, 1);

  r.neg_matches = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!(ideal_to_element(annihilator(ideals[i])) == neg(elems[i]))) r.neg_matches = false;

  r.radical_matches = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!(ideal_to_element(radical_ideal(ideals[i])) == radical_on_frame(sig, elems[i])))
      r.radical_matches = false;

  r.order_iso = true;
  r.oplus_matches = true;
  auto check_pair = [&](std::size_t i, std::size_t j) {
    if (ideals[j].contains(ideals[i]) != leq(elems[i], elems[j])) r.order_iso = false;
    if (!(ideal_to_element(oplus_ideals(ideals[i], ideals[j])) == oplus(elems[i], elems[j])))
      r.oplus_matches = false;
  };
  if (r.pairs_exhaustive) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) check_pair(i, j);
  } else {
    Sampler sampler(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int s = 0; s < opts.samples; ++s) check_pair(pick(sampler.rng()), pick(sampler.rng()));
  }
  return r;
}

RadicalNucleusReport radical_nucleus_report(const FiniteRing& ring, const CheckOptions& opts) {
  RadicalNucleusReport r;
  ring.ideal_count(opts.enum_bound);
  Signature sig = ideal_lattice_signature(ring);
  r.classification = classify_nucleus(NucleusSpec::radical(sig), opts);

  r.dense_expected = true;
  for (const ChainRingFactor& f : ring.factors())
    if (f.k != 1) r.dense_expected = false;
  r.dense_matches = r.classification.dense == r.dense_expected;

  // Fixed points must be exactly the product of {(n-2)/(n-1), 1} over the
  // coordinates, hence 2^factors many points with coordinates in that set.
  r.fixed_points_closed_form = false;
  if (r.classification.fixed_points) {
    const std::vector<Element>& fixed = *r.classification.fixed_points;
    std::uint64_t expect = std::uint64_t{1} << ring.factor_count();
    bool ok = fixed.size() == expect;
    for (const Element& f : fixed)
      for (std::size_t i = 0; ok && i < ring.factor_count(); ++i) {
        int nsize = ring.factors()[i].k + 1;
        Rat v = f.at(i, 0);
        if (!(v == Rat(1) || v == Rat(nsize - 2, nsize - 1))) ok = false;
      }
    r.fixed_points_closed_form = ok;
  }

  r.mv_expected = r.dense_expected;  // closure under neg forces 0, so all chains are L_2
  r.mv_subalgebra_matches = r.classification.mv_type == r.mv_expected;
  return r;
}

}  // namespace mvf
