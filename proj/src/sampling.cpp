#include "mvf/sampling.hpp"

#include <set>

namespace mvf {

Rat Sampler::factor_value(const FactorKind& kind) {
  if (kind.is_chain()) {
    int n = kind.chain_size();
    std::uniform_int_distribution<int> d(0, n - 1);
    return Rat(d(rng_), n - 1);
  }
  std::uniform_int_distribution<long long> den(1, 12);
  long long q = den(rng_);
  std::uniform_int_distribution<long long> num(0, q);
  return Rat(num(rng_), q);
}

std::uint64_t Sampler::index_in(const Multiplicity& mult, std::uint64_t window) {
  std::uint64_t hi = mult.is_finite() ? std::min(mult.count(), window) : window;
  std::uniform_int_distribution<std::uint64_t> d(0, hi - 1);
  return d(rng_);
}

Element Sampler::element(const Signature& sig, int max_exceptions) {
  std::vector<Element::BlockValues> values(sig.block_count());
  std::uniform_int_distribution<int> count(0, max_exceptions);
  for (std::size_t b = 0; b < sig.block_count(); ++b) {
    const Block& blk = sig.blocks()[b];
    values[b].def = factor_value(blk.kind);
    std::set<std::uint64_t> used;
    int k = count(rng_);
    for (int t = 0; t < k; ++t) used.insert(index_in(blk.mult));
    for (std::uint64_t i : used) values[b].exceptions.emplace_back(i, factor_value(blk.kind));
  }
  return Element::make(sig, std::move(values));
}

Element Sampler::compact_element(const Signature& sig, int max_support) {
  std::vector<Element::BlockValues> values(sig.block_count());
  std::uniform_int_distribution<int> count(0, max_support);
  for (std::size_t b = 0; b < sig.block_count(); ++b) {
    const Block& blk = sig.blocks()[b];
    values[b].def = Rat(0);
    if (blk.kind.is_unit_interval()) continue;  // compacts vanish on intervals
    if (blk.mult.is_finite()) values[b].def = factor_value(blk.kind);
    std::set<std::uint64_t> used;
    int k = count(rng_);
    for (int t = 0; t < k; ++t) used.insert(index_in(blk.mult));
    for (std::uint64_t i : used) values[b].exceptions.emplace_back(i, factor_value(blk.kind));
  }
  return Element::make(sig, std::move(values));
}

Element Sampler::chi(const Signature& sig, int max_support) {
  std::vector<Element::BlockValues> values(sig.block_count());
  std::uniform_int_distribution<int> count(0, max_support);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t b = 0; b < sig.block_count(); ++b) {
    const Block& blk = sig.blocks()[b];
    values[b].def = Rat(0);
    if (blk.kind.is_unit_interval()) continue;
    if (blk.mult.is_finite()) values[b].def = Rat(coin(rng_));
    std::set<std::uint64_t> used;
    int k = count(rng_);
    for (int t = 0; t < k; ++t) used.insert(index_in(blk.mult));
    for (std::uint64_t i : used) values[b].exceptions.emplace_back(i, Rat(coin(rng_)));
  }
  return Element::make(sig, std::move(values));
}

}  // namespace mvf
