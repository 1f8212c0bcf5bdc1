#include "mvf/lugroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <random>

namespace mvf {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw BadParameter("integer overflow in group arithmetic");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw BadParameter("integer overflow in group arithmetic");
  return r;
}

// Same canonical form as for algebra elements: sorted exceptions, none equal
// to the default, majority default on finite blocks.
void canonicalize_lu_block(const LuBlock& blk, LuElement::BlockValues& bv) {
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
  std::map<long long, std::uint64_t> tally;
  for (const auto& [i, v] : exc) ++tally[v];
  long long best = bv.def;
  std::uint64_t best_count = def_count;
  for (const auto& [v, c] : tally)
    if (c > best_count || (c == best_count && v < best)) {
      best = v;
      best_count = c;
    }
  if (best == bv.def) return;

  std::vector<std::pair<std::uint64_t, long long>> out;
  out.reserve(m - best_count);
  std::size_t e = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    long long v = bv.def;
    if (e < exc.size() && exc[e].first == i) v = exc[e++].second;
    if (v != best) out.emplace_back(i, v);
  }
  bv.def = best;
  bv.exceptions = std::move(out);
}

long long lu_block_value_at(const LuElement::BlockValues& bv, std::uint64_t index) {
  auto it = std::lower_bound(bv.exceptions.begin(), bv.exceptions.end(), index,
                             [](const auto& p, std::uint64_t i) { return p.first < i; });
  if (it != bv.exceptions.end() && it->first == index) return it->second;
  return bv.def;
}

void require_same_lu_signature(const LuElement& a, const LuElement& b) {
  if (a.sig_ptr() == b.sig_ptr()) return;
  if (!(a.sig() == b.sig()))
    throw SignatureMismatch("group elements live in different groups");
}

template <typename F>
LuElement::BlockValues zip_lu_block(const LuElement::BlockValues& x,
                                    const LuElement::BlockValues& y, const F& f) {
  LuElement::BlockValues out;
  out.def = f(x.def, y.def);
  std::size_t i = 0, j = 0;
  while (i < x.exceptions.size() || j < y.exceptions.size()) {
    std::uint64_t xi = i < x.exceptions.size() ? x.exceptions[i].first
                                               : std::numeric_limits<std::uint64_t>::max();
    std::uint64_t yj = j < y.exceptions.size() ? y.exceptions[j].first
                                               : std::numeric_limits<std::uint64_t>::max();
    std::uint64_t idx = std::min(xi, yj);
    long long xv = xi == idx ? x.exceptions[i++].second : x.def;
    long long yv = yj == idx ? y.exceptions[j++].second : y.def;
    out.exceptions.emplace_back(idx, f(xv, yv));
  }
  return out;
}

template <typename F>
LuElement zip_lu(const LuElement& x, const LuElement& y, const F& f) {
  require_same_lu_signature(x, y);
  std::vector<LuElement::BlockValues> out;
  out.reserve(x.blocks().size());
  for (std::size_t b = 0; b < x.blocks().size(); ++b)
    out.push_back(zip_lu_block(x.blocks()[b], y.blocks()[b], f));
  return LuElement::make(x.sig_ptr(), std::move(out));
}

void require_in_unit_interval(const LuElement& a, const char* what) {
  for (std::size_t b = 0; b < a.blocks().size(); ++b) {
    long long u = a.sig().blocks()[b].unit;
    const auto& bv = a.blocks()[b];
    bool ok = bv.def >= 0 && bv.def <= u;
    for (const auto& [i, v] : bv.exceptions)
      if (v < 0 || v > u) ok = false;
    if (!ok)
      throw BadParameter(std::string(what) + " needs values between 0 and the unit in block " +
                         std::to_string(b));
  }
}

// Random element of [0, u], mirroring the algebra-side sampler.
LuElement sample_unit_interval(const LuSignature& sig, std::mt19937_64& rng) {
  std::vector<LuElement::BlockValues> values(sig.block_count());
  for (std::size_t b = 0; b < values.size(); ++b) {
    const LuBlock& blk = sig.blocks()[b];
    std::uniform_int_distribution<long long> val(0, blk.unit);
    values[b].def = val(rng);
    std::uint64_t window = blk.mult.is_finite() ? blk.mult.count() : 64;
    std::uniform_int_distribution<std::uint64_t> idx(0, window - 1);
    std::uniform_int_distribution<int> howmany(0, 3);
    for (int e = howmany(rng); e > 0; --e) {
      std::uint64_t i = idx(rng);
      std::erase_if(values[b].exceptions, [&](const auto& p) { return p.first == i; });
      values[b].exceptions.emplace_back(i, val(rng));
    }
  }
  return LuElement::make(sig, std::move(values));
}

}  // namespace

LuSignature::LuSignature(std::vector<LuBlock> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw BadParameter("a group signature needs at least one block");
  for (const LuBlock& b : blocks_)
    if (b.unit < 1) throw BadParameter("strong unit coordinates must be at least 1");
}

bool LuSignature::index_set_finite() const {
  for (const LuBlock& b : blocks_)
    if (!b.mult.is_finite()) return false;
  return true;
}

std::string LuSignature::describe() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += " x ";
    const LuBlock& blk = blocks_[b];
    out += "<Z";
    if (!blk.mult.is_finite())
      out += "^inf";
    else if (blk.mult.count() != 1)
      out += "^" + std::to_string(blk.mult.count());
    out += ", " + std::to_string(blk.unit) + ">";
  }
  return out;
}

LuElement LuElement::make(std::shared_ptr<const LuSignature> sig, std::vector<BlockValues> values) {
  const LuSignature& s = *sig;
  if (values.size() != s.block_count())
    throw BadParameter("element has " + std::to_string(values.size()) + " blocks, group has " +
                       std::to_string(s.block_count()));
  for (std::size_t b = 0; b < values.size(); ++b) {
    const LuBlock& blk = s.blocks()[b];
    auto& bv = values[b];
    for (const auto& [i, v] : bv.exceptions)
      if (!blk.mult.contains_index(i))
        throw BadParameter("exception index " + std::to_string(i) + " out of range in block " +
                           std::to_string(b));
    canonicalize_lu_block(blk, bv);
  }
  return LuElement(std::move(sig), std::move(values));
}

LuElement LuElement::make(const LuSignature& sig, std::vector<BlockValues> values) {
  return make(std::make_shared<const LuSignature>(sig), std::move(values));
}

LuElement LuElement::constant(const LuSignature& sig, long long v) {
  std::vector<BlockValues> values(sig.block_count());
  for (auto& bv : values) bv.def = v;
  return make(sig, std::move(values));
}

LuElement LuElement::unit(const LuSignature& sig) {
  std::vector<BlockValues> values(sig.block_count());
  for (std::size_t b = 0; b < values.size(); ++b) values[b].def = sig.blocks()[b].unit;
  return make(sig, std::move(values));
}

long long LuElement::at(std::size_t block, std::uint64_t index) const {
  if (block >= blocks_.size()) throw BadParameter("block index out of range");
  if (!sig_->blocks()[block].mult.contains_index(index))
    throw BadParameter("coordinate index out of range");
  return lu_block_value_at(blocks_[block], index);
}

LuElement LuElement::with_coord(std::size_t block, std::uint64_t index, long long v) const {
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

bool LuElement::is_constant(long long v) const {
  for (const auto& bv : blocks_)
    if (bv.def != v || !bv.exceptions.empty()) return false;
  return true;
}

bool LuElement::finite_support() const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (!sig_->blocks()[b].mult.is_finite() && blocks_[b].def != 0) return false;
  return true;
}

bool LuElement::operator==(const LuElement& other) const {
  if (sig_ != other.sig_ && !(*sig_ == *other.sig_)) return false;
  return blocks_ == other.blocks_;
}

LuElement lu_add(const LuElement& a, const LuElement& b) {
  return zip_lu(a, b, [](long long x, long long y) { return checked_add(x, y); });
}

LuElement lu_sub(const LuElement& a, const LuElement& b) {
  return zip_lu(a, b, [](long long x, long long y) { return checked_add(x, -y); });
}

LuElement lu_neg(const LuElement& a) { return lu_sub(LuElement::zero(a.sig()), a); }

LuElement lu_min(const LuElement& a, const LuElement& b) {
  return zip_lu(a, b, [](long long x, long long y) { return std::min(x, y); });
}

LuElement lu_max(const LuElement& a, const LuElement& b) {
  return zip_lu(a, b, [](long long x, long long y) { return std::max(x, y); });
}

bool lu_leq(const LuElement& a, const LuElement& b) { return lu_min(a, b) == a; }

LuElement pos_part(const LuElement& a) { return lu_max(a, LuElement::zero(a.sig())); }

LuElement neg_part(const LuElement& a) { return lu_max(lu_neg(a), LuElement::zero(a.sig())); }

LuElement abs_val(const LuElement& a) { return lu_max(a, lu_neg(a)); }

LuElement unit_oplus(const LuElement& a, const LuElement& b) {
  require_same_lu_signature(a, b);
  require_in_unit_interval(a, "truncated addition");
  require_in_unit_interval(b, "truncated addition");
  return lu_min(lu_add(a, b), LuElement::unit(a.sig()));
}

LuElement unit_neg(const LuElement& a) {
  require_in_unit_interval(a, "unit reflection");
  return lu_sub(LuElement::unit(a.sig()), a);
}

long long least_unit_multiple(const LuElement& a) {
  long long n = 0;
  for (std::size_t b = 0; b < a.blocks().size(); ++b) {
    long long u = a.sig().blocks()[b].unit;
    auto cover = [&](long long v) {
      long long m = std::abs(v);
      n = std::max(n, (m + u - 1) / u);
    };
    cover(a.blocks()[b].def);
    for (const auto& [i, v] : a.blocks()[b].exceptions) cover(v);
  }
  return n;
}

Signature gamma(const LuSignature& sig) {
  std::vector<Block> blocks;
  for (const LuBlock& b : sig.blocks()) {
    if (b.unit > std::numeric_limits<int>::max() - 1)
      throw BadParameter("unit too large to form a chain factor");
    blocks.push_back({FactorKind::chain(static_cast<int>(b.unit) + 1), b.mult});
  }
  return Signature(std::move(blocks));
}

LuSignature phi(const Signature& sig) {
  std::vector<LuBlock> blocks;
  for (const Block& b : sig.blocks()) {
    if (b.kind.is_unit_interval())
      throw UnitIntervalNotRepresentable(
          "the unit interval is not the unit interval of an integer-vector group");
    blocks.push_back({static_cast<long long>(b.kind.chain_size()) - 1, b.mult});
  }
  return LuSignature(std::move(blocks));
}

Element gamma_element(const LuElement& g) {
  require_in_unit_interval(g, "interval value map");
  Signature sig = gamma(g.sig());
  std::vector<Element::BlockValues> values(g.blocks().size());
  for (std::size_t b = 0; b < values.size(); ++b) {
    long long u = g.sig().blocks()[b].unit;
    values[b].def = Rat(g.blocks()[b].def, u);
    for (const auto& [i, v] : g.blocks()[b].exceptions)
      values[b].exceptions.emplace_back(i, Rat(v, u));
  }
  return Element::make(sig, std::move(values));
}

LuElement phi_element(const Element& x) {
  LuSignature sig = phi(x.sig());
  std::vector<LuElement::BlockValues> values(x.blocks().size());
  for (std::size_t b = 0; b < values.size(); ++b) {
    long long u = sig.blocks()[b].unit;
    auto to_int = [&](const Rat& v) { return v.num() * (u / v.den()); };
    values[b].def = to_int(x.blocks()[b].def);
    for (const auto& [i, v] : x.blocks()[b].exceptions)
      values[b].exceptions.emplace_back(i, to_int(v));
  }
  return LuElement::make(sig, std::move(values));
}

GammaReport gamma_verified(const LuSignature& sig, const CheckOptions& opts) {
  GammaReport r{gamma(sig)};
  r.ops_agree = true;
  r.axioms_hold = true;
  std::mt19937_64 rng(opts.seed);
  LuElement u = LuElement::unit(sig);
  for (int s = 0; s < opts.samples; ++s) {
    LuElement a = sample_unit_interval(sig, rng);
    LuElement b = sample_unit_interval(sig, rng);
    Element ga = gamma_element(a), gb = gamma_element(b);
    if (!(gamma_element(unit_oplus(a, b)) == oplus(ga, gb))) r.ops_agree = false;
    if (!(gamma_element(unit_neg(a)) == neg(ga))) r.ops_agree = false;
    if (!(unit_neg(unit_neg(a)) == a)) r.axioms_hold = false;
    if (!(unit_oplus(a, u) == u)) r.axioms_hold = false;
    // The characteristic identity: neg(neg(a) + b) + b is the join.
    if (!(unit_oplus(unit_neg(unit_oplus(unit_neg(a), b)), b) == lu_max(a, b)))
      r.axioms_hold = false;
    ++r.samples;
  }
  return r;
}

CompactnessVerdict is_lu_compact(const LuElement& g) {
  LuElement capped = lu_min(abs_val(g), LuElement::unit(g.sig()));
  return is_compact(gamma_element(capped));
}

namespace {

// Finite-support truncation of a nonnegative element: finite blocks kept
// whole, infinite blocks kept on their first depth coordinates.
LuElement truncate_at(const LuElement& g, std::uint64_t depth) {
  std::vector<LuElement::BlockValues> values(g.blocks().size());
  for (std::size_t b = 0; b < values.size(); ++b) {
    if (g.sig().blocks()[b].mult.is_finite()) {
      values[b] = g.blocks()[b];
      continue;
    }
    values[b].def = 0;
    for (std::uint64_t i = 0; i < depth; ++i) {
      long long v = g.at(b, i);
      if (v != 0) values[b].exceptions.emplace_back(i, v);
    }
  }
  return LuElement::make(g.sig_ptr(), std::move(values));
}

// Check one nonnegative element against the join-of-compacts identity.
void check_part(const LuElement& p, LuAlgebraicReport& r) {
  std::uint64_t depth = 1;
  for (std::size_t b = 0; b < p.blocks().size(); ++b)
    if (!p.sig().blocks()[b].mult.is_finite())
      for (const auto& [i, v] : p.blocks()[b].exceptions) depth = std::max(depth, i + 2);
  for (std::uint64_t n = 1; n <= depth; ++n) {
    LuElement a = truncate_at(p, n);
    if (!lu_leq(a, p)) r.approximants_below = false;
    if (!is_lu_compact(a).compact) r.approximants_compact = false;
  }
  // Every described coordinate is matched by the deepest approximant; the
  // remaining coordinates repeat the block default, which index depth covers.
  LuElement deepest = truncate_at(p, depth);
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    const LuBlock& blk = p.sig().blocks()[b];
    if (blk.mult.is_finite()) {
      if (!(deepest.blocks()[b] == p.blocks()[b])) r.join_reaches = false;
      continue;
    }
    for (const auto& [i, v] : p.blocks()[b].exceptions)
      if (deepest.at(b, i) != v) r.join_reaches = false;
    if (deepest.at(b, depth - 1) != p.at(b, depth - 1)) r.join_reaches = false;
  }
}

}  // namespace

LuAlgebraicReport is_algebraic_lu_frame(const LuSignature& sig, const CheckOptions& opts) {
  LuAlgebraicReport r;
  std::mt19937_64 rng(opts.seed);
  int samples = std::min(opts.samples, 100);
  for (int s = 0; s < samples; ++s) {
    // Sample across [-2u, 2u] by differencing two interval samples scaled up,
    // then reduce to the nonnegative parts.
    LuElement x = lu_sub(lu_add(sample_unit_interval(sig, rng), sample_unit_interval(sig, rng)),
                         lu_add(sample_unit_interval(sig, rng), sample_unit_interval(sig, rng)));
    check_part(pos_part(x), r);
    check_part(neg_part(x), r);
    ++r.samples;
  }
  r.algebraic = r.approximants_below && r.approximants_compact && r.join_reaches;
  r.note =
      "each nonnegative part is the pointwise supremum of its finite-support truncations, "
      "which are exactly the compact elements below it";
  return r;
}

LuHom::LuHom(LuSignature source, LuSignature target, std::vector<IndexRule> rules)
    : source_(std::make_shared<const LuSignature>(std::move(source))),
      target_(std::make_shared<const LuSignature>(std::move(target))),
      rules_(std::move(rules)) {
  if (rules_.size() != target_->block_count())
    throw BadParameter("expected one index rule per target block");
  for (std::size_t tb = 0; tb < rules_.size(); ++tb) {
    const IndexRule& r = rules_[tb];
    if (r.source_block >= source_->block_count())
      throw BadParameter("index rule refers to missing source block " +
                         std::to_string(r.source_block));
    const LuBlock& sblk = source_->blocks()[r.source_block];
    const LuBlock& tblk = target_->blocks()[tb];
    if (tblk.unit % sblk.unit != 0)
      throw NotUnitPreserving("target unit " + std::to_string(tblk.unit) +
                              " is not an integer multiple of source unit " +
                              std::to_string(sblk.unit));
    scales_.push_back(tblk.unit / sblk.unit);
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
}

LuHom LuHom::identity(const LuSignature& sig) {
  std::vector<IndexRule> rules(sig.block_count());
  for (std::size_t b = 0; b < rules.size(); ++b)
    rules[b] = IndexRule{IndexRule::Kind::SameIndex, b, 0};
  return LuHom(sig, sig, std::move(rules));
}

LuElement LuHom::apply(const LuElement& g) const {
  if (!(g.sig() == *source_)) throw SignatureMismatch("element does not live in the source group");
  std::vector<LuElement::BlockValues> values(target_->block_count());
  for (std::size_t tb = 0; tb < values.size(); ++tb) {
    const IndexRule& r = rules_[tb];
    long long s = scales_[tb];
    auto& bv = values[tb];
    if (r.kind == IndexRule::Kind::SameIndex) {
      const auto& src = g.blocks()[r.source_block];
      bv.def = checked_mul(src.def, s);
      for (const auto& [i, v] : src.exceptions)
        if (target_->blocks()[tb].mult.contains_index(i))
          bv.exceptions.emplace_back(i, checked_mul(v, s));
    } else {
      bv.def = checked_mul(g.at(r.source_block, r.source_index), s);
    }
  }
  return LuElement::make(target_, std::move(values));
}

ProductHom gamma_hom(const LuHom& f) {
  return ProductHom(gamma(f.source()), gamma(f.target()), f.rules());
}

}  // namespace mvf
