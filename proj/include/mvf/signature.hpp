#pragma once

#include <cstdint>
#include <vector>

#include "mvf/errors.hpp"
#include "mvf/rational.hpp"

namespace mvf {

// One factor of a standard-form product algebra: a finite chain with n
// elements {0, 1/(n-1), ..., 1} or the full unit interval.
class FactorKind {
 public:
  static FactorKind chain(int n) {
    if (n < 2) throw BadParameter("chain factor needs at least 2 elements");
    FactorKind k;
    k.n_ = n;
    return k;
  }
  static FactorKind unit_interval() { return FactorKind{}; }

  bool is_chain() const { return n_ != 0; }
  bool is_unit_interval() const { return n_ == 0; }
  int chain_size() const {
    if (n_ == 0) throw InfiniteCarrier("unit-interval factor has no finite chain size");
    return n_;
  }

  bool contains(const Rat& v) const {
    if (v < Rat(0) || Rat(1) < v) return false;
    if (n_ == 0) return true;
    return (n_ - 1) % v.den() == 0;
  }

  std::vector<Rat> carrier() const {
    int n = chain_size();
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) out.emplace_back(k, n - 1);
    return out;
  }

  bool operator==(const FactorKind&) const = default;

 private:
  int n_ = 0;  // 0 encodes the unit interval
};

// How many copies of a factor a block contributes: a positive finite count or
// countably many, indexed 0,1,2,...
class Multiplicity {
 public:
  static Multiplicity finite(std::uint64_t m) {
    if (m == 0) throw BadParameter("block multiplicity must be positive");
    Multiplicity r;
    r.m_ = m;
    return r;
  }
  static Multiplicity infinite() { return Multiplicity{}; }

  bool is_finite() const { return m_ != 0; }
  std::uint64_t count() const {
    if (m_ == 0) throw InfiniteCarrier("block has countably many coordinates");
    return m_;
  }
  bool contains_index(std::uint64_t i) const { return m_ == 0 || i < m_; }

  bool operator==(const Multiplicity&) const = default;

 private:
  std::uint64_t m_ = 0;  // 0 encodes countably infinite
};

struct Block {
  FactorKind kind;
  Multiplicity mult;
  bool operator==(const Block&) const = default;
};

// A standard-form product of chains and unit intervals, grouped into blocks
// of identical factors. Coordinates are addressed as (block, index).
class Signature {
 public:
  explicit Signature(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw BadParameter("signature needs at least one block");
  }

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  const Block& block(std::size_t b) const {
    if (b >= blocks_.size()) throw BadParameter("block index out of range");
    return blocks_[b];
  }

  bool has_unit_interval() const {
    for (const auto& b : blocks_)
      if (b.kind.is_unit_interval()) return true;
    return false;
  }
  bool index_set_finite() const {
    for (const auto& b : blocks_)
      if (!b.mult.is_finite()) return false;
    return true;
  }
  bool fully_finite() const { return index_set_finite() && !has_unit_interval(); }
  bool all_chains_of_size(int n) const {
    for (const auto& b : blocks_)
      if (!b.kind.is_chain() || b.kind.chain_size() != n) return false;
    return true;
  }

  // Number of elements, provided it is finite and within `bound`.
  std::uint64_t carrier_size(std::uint64_t bound) const {
    if (!fully_finite())
      throw InfiniteCarrier("carrier is infinite (unit-interval factor or infinite index set)");
    std::uint64_t total = 1;
    for (const auto& b : blocks_) {
      std::uint64_t n = static_cast<std::uint64_t>(b.kind.chain_size());
      for (std::uint64_t i = 0; i < b.mult.count(); ++i) {
        if (total > bound / n)
          throw CarrierTooLarge("carrier exceeds enumeration bound of " + std::to_string(bound));
        total *= n;
      }
    }
    return total;
  }

  bool operator==(const Signature&) const = default;

 private:
  std::vector<Block> blocks_;
};

// Equality of the underlying coordinate multiset, ignoring how coordinates
// are grouped into blocks and the order of blocks.
bool same_up_to_relabeling(const Signature& a, const Signature& b);

}  // namespace mvf
