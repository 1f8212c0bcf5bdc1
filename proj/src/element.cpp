#include "mvf/element.hpp"

#include <algorithm>
#include <map>

namespace mvf {

namespace {

// Re-derive the canonical representation of one block: no exception may equal
// the default, and for finite blocks the default is the most frequent value
// (ties broken toward the smaller value), so equal functions have equal
// representations regardless of how they were built.
void canonicalize_block(const Block& blk, Element::BlockValues& bv) {
  auto& exc = bv.exceptions;
  std::sort(exc.begin(), exc.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < exc.size(); ++i)
    if (exc[i].first == exc[i - 1].first)
      throw BadParameter("duplicate exception index " + std::to_string(exc[i].first));
  exc.erase(std::remove_if(exc.begin(), exc.end(),
                           [&](const auto& p) { return p.second == bv.def; }),
            exc.end());
  if (!blk.mult.is_finite() || exc.empty()) return;

  std::uint64_t m = blk.mult.count();
  std::uint64_t def_count = m - exc.size();
  std::map<Rat, std::uint64_t> tally;
  for (const auto& [i, v] : exc) ++tally[v];
  Rat best = bv.def;
  std::uint64_t best_count = def_count;
  for (const auto& [v, c] : tally)
    if (c > best_count || (c == best_count && v < best)) {
      best = v;
      best_count = c;
    }
  if (best == bv.def) return;

  // The winner covers more than half the block, so rewriting stays linear in
  // the size of the existing representation.
  std::vector<std::pair<std::uint64_t, Rat>> out;
  out.reserve(m - best_count);
  std::size_t e = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    Rat v = bv.def;
    if (e < exc.size() && exc[e].first == i) v = exc[e++].second;
    if (!(v == best)) out.emplace_back(i, v);
  }
  bv.def = best;
  bv.exceptions = std::move(out);
}

Rat block_value_at(const Element::BlockValues& bv, std::uint64_t index) {
  auto it = std::lower_bound(bv.exceptions.begin(), bv.exceptions.end(), index,
                             [](const auto& p, std::uint64_t i) { return p.first < i; });
  if (it != bv.exceptions.end() && it->first == index) return it->second;
  return bv.def;
}

}  // namespace

Element Element::make(std::shared_ptr<const Signature> sig, std::vector<BlockValues> values) {
  const Signature& s = *sig;
  if (values.size() != s.block_count())
    throw BadParameter("element has " + std::to_string(values.size()) + " blocks, signature has " +
                       std::to_string(s.block_count()));
  for (std::size_t b = 0; b < values.size(); ++b) {
    const Block& blk = s.blocks()[b];
    auto& bv = values[b];
    if (!blk.kind.contains(bv.def))
      throw BadParameter("default " + bv.def.str() + " is not in the factor carrier of block " +
                         std::to_string(b));
    for (const auto& [i, v] : bv.exceptions) {
      if (!blk.mult.contains_index(i))
        throw BadParameter("exception index " + std::to_string(i) + " out of range in block " +
                           std::to_string(b));
      if (!blk.kind.contains(v))
        throw BadParameter("value " + v.str() + " is not in the factor carrier of block " +
                           std::to_string(b));
    }
    canonicalize_block(blk, bv);
  }
  return Element(std::move(sig), std::move(values));
}

Element Element::make(const Signature& sig, std::vector<BlockValues> values) {
  return make(std::make_shared<const Signature>(sig), std::move(values));
}

Element Element::constant(const Signature& sig, const Rat& v) {
  std::vector<BlockValues> values(sig.block_count());
  for (auto& bv : values) bv.def = v;
  return make(sig, std::move(values));
}

Rat Element::at(std::size_t block, std::uint64_t index) const {
  if (block >= blocks_.size()) throw BadParameter("block index out of range");
  if (!sig_->blocks()[block].mult.contains_index(index))
    throw BadParameter("coordinate index out of range");
  return block_value_at(blocks_[block], index);
}

Element Element::with_coord(std::size_t block, std::uint64_t index, const Rat& v) const {
  if (block >= blocks_.size()) throw BadParameter("block index out of range");
  std::vector<BlockValues> values = blocks_;
  auto& exc = values[block].exceptions;
  auto it = std::lower_bound(exc.begin(), exc.end(), index,
                             [](const auto& p, std::uint64_t i) { return p.first < i; });
  if (it != exc.end() && it->first == index)
    it->second = v;
  else
    exc.insert(it, {index, v});
  return make(sig_, std::move(values));
}

bool Element::is_constant(const Rat& v) const {
  for (const auto& bv : blocks_)
    if (!(bv.def == v) || !bv.exceptions.empty()) return false;
  return true;
}

bool Element::finite_support() const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (!sig_->blocks()[b].mult.is_finite() && !(blocks_[b].def == Rat(0))) return false;
  return true;
}

bool Element::boolean_valued() const {
  auto ok = [](const Rat& v) { return v == Rat(0) || v == Rat(1); };
  for (const auto& bv : blocks_) {
    if (!ok(bv.def)) return false;
    for (const auto& [i, v] : bv.exceptions)
      if (!ok(v)) return false;
  }
  return true;
}

std::vector<std::pair<std::pair<std::size_t, std::uint64_t>, Rat>> Element::support() const {
  if (!finite_support()) throw InfiniteCarrier("element does not have finite support");
  std::vector<std::pair<std::pair<std::size_t, std::uint64_t>, Rat>> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& bv = blocks_[b];
    if (!(bv.def == Rat(0))) {
      // Finite block with a nonzero default: every non-exception coordinate
      // contributes.
      std::uint64_t m = sig_->blocks()[b].mult.count();
      std::size_t e = 0;
      for (std::uint64_t i = 0; i < m; ++i) {
        Rat v = bv.def;
        if (e < bv.exceptions.size() && bv.exceptions[e].first == i) v = bv.exceptions[e++].second;
        if (!(v == Rat(0))) out.push_back({{b, i}, v});
      }
    } else {
      for (const auto& [i, v] : bv.exceptions)
        if (!(v == Rat(0))) out.push_back({{b, i}, v});
    }
  }
  return out;
}

bool ElementLess::operator()(const Element& a, const Element& b) const {
  const auto& x = a.blocks();
  const auto& y = b.blocks();
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].def != y[i].def) return x[i].def < y[i].def;
    const auto& p = x[i].exceptions;
    const auto& q = y[i].exceptions;
    if (p.size() != q.size()) return p.size() < q.size();
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j].first != q[j].first) return p[j].first < q[j].first;
      if (p[j].second != q[j].second) return p[j].second < q[j].second;
    }
  }
  return false;
}

namespace detail {

void require_same_signature(const Element& x, const Element& y) {
  if (x.sig_ptr() == y.sig_ptr()) return;
  if (!(x.sig() == y.sig()))
    throw SignatureMismatch("operands live in different product algebras");
}

Element::BlockValues zip_block(const Element::BlockValues& a, const Element::BlockValues& b,
                               const std::function<Rat(const Rat&, const Rat&)>& f) {
  Element::BlockValues r;
  r.def = f(a.def, b.def);
  const auto& p = a.exceptions;
  const auto& q = b.exceptions;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < p.size() || j < q.size()) {
    if (j == q.size() || (i < p.size() && p[i].first < q[j].first)) {
      r.exceptions.emplace_back(p[i].first, f(p[i].second, b.def));
      ++i;
    } else if (i == p.size() || q[j].first < p[i].first) {
      r.exceptions.emplace_back(q[j].first, f(a.def, q[j].second));
      ++j;
    } else {
      r.exceptions.emplace_back(p[i].first, f(p[i].second, q[j].second));
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace detail

Element oplus(const Element& x, const Element& y) {
  return detail::zip(x, y,
                     [](const Rat& a, const Rat& b) { return min(a + b, Rat(1)); });
}

Element neg(const Element& x) {
  return detail::map_blockwise(x, [](std::size_t, const Rat& v) { return Rat(1) - v; });
}

Element join(const Element& x, const Element& y) {
  return detail::zip(x, y, [](const Rat& a, const Rat& b) { return max(a, b); });
}

Element meet(const Element& x, const Element& y) {
  return detail::zip(x, y, [](const Rat& a, const Rat& b) { return min(a, b); });
}

Element join_mv(const Element& x, const Element& y) {
  return oplus(neg(oplus(neg(x), y)), y);
}

Element meet_mv(const Element& x, const Element& y) {
  return neg(join_mv(neg(x), neg(y)));
}

bool leq(const Element& x, const Element& y) {
  detail::require_same_signature(x, y);
  for (std::size_t b = 0; b < x.blocks().size(); ++b) {
    const auto& p = x.blocks()[b];
    const auto& q = y.blocks()[b];
    for (const auto& [i, v] : p.exceptions)
      if (block_value_at(q, i) < v) return false;
    for (const auto& [i, v] : q.exceptions)
      if (v < block_value_at(p, i)) return false;
    if (q.def < p.def) {
      // The default pair is only realized at indices outside both exception
      // lists: everywhere cofinitely on an infinite block, but possibly
      // nowhere on a finite one.
      const Multiplicity& mult = x.sig().blocks()[b].mult;
      if (!mult.is_finite()) return false;
      std::uint64_t covered = 0;
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < p.exceptions.size() || j < q.exceptions.size()) {
        bool take_p = i < p.exceptions.size() &&
                      (j == q.exceptions.size() || p.exceptions[i].first <= q.exceptions[j].first);
        bool take_q = j < q.exceptions.size() &&
                      (i == p.exceptions.size() || q.exceptions[j].first <= p.exceptions[i].first);
        if (take_p) ++i;
        if (take_q) ++j;
        ++covered;
      }
      if (covered < mult.count()) return false;
    }
  }
  return true;
}

bool leq_mv(const Element& x, const Element& y) { return oplus(neg(x), y).is_one(); }

std::vector<Element> enumerate_elements(const Signature& sig, std::uint64_t bound) {
  std::uint64_t total = sig.carrier_size(bound);
  auto shared = std::make_shared<const Signature>(sig);

  // Flatten (block, index) coordinates and run an odometer over the chain
  // carriers, least-significant coordinate first.
  struct Coord {
    std::size_t block;
    std::uint64_t index;
    std::vector<Rat> carrier;
  };
  std::vector<Coord> coords;
  for (std::size_t b = 0; b < sig.block_count(); ++b) {
    const Block& blk = sig.blocks()[b];
    for (std::uint64_t i = 0; i < blk.mult.count(); ++i)
      coords.push_back({b, i, blk.kind.carrier()});
  }

  std::vector<std::size_t> digit(coords.size(), 0);
  std::vector<Element> out;
  out.reserve(total);
  for (std::uint64_t count = 0; count < total; ++count) {
    std::vector<Element::BlockValues> values(sig.block_count());
    for (std::size_t b = 0; b < values.size(); ++b) values[b].def = Rat(0);
    for (std::size_t c = 0; c < coords.size(); ++c) {
      const Rat& v = coords[c].carrier[digit[c]];
      if (!(v == Rat(0))) values[coords[c].block].exceptions.emplace_back(coords[c].index, v);
    }
    out.push_back(Element::make(shared, std::move(values)));
    for (std::size_t c = 0; c < coords.size(); ++c) {
      if (++digit[c] < coords[c].carrier.size()) break;
      digit[c] = 0;
    }
  }
  return out;
}

}  // namespace mvf
