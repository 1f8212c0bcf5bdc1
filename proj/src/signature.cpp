#include "mvf/signature.hpp"

#include <map>
#include <tuple>

namespace mvf {

namespace {

struct KindKey {
  bool interval;
  int n;
  bool operator<(const KindKey& o) const {
    return std::tie(interval, n) < std::tie(o.interval, o.n);
  }
  bool operator==(const KindKey&) const = default;
};

// Per factor kind: how many coordinates the signature contributes, where 0
// paired with `infinite` means countably many (finite counts are absorbed).
struct KindTotal {
  bool infinite = false;
  std::uint64_t finite = 0;
  bool operator==(const KindTotal&) const = default;
};

std::map<KindKey, KindTotal> coordinate_multiset(const Signature& s) {
  std::map<KindKey, KindTotal> m;
  for (const auto& b : s.blocks()) {
    KindKey k{b.kind.is_unit_interval(), b.kind.is_chain() ? b.kind.chain_size() : 0};
    auto& t = m[k];
    if (b.mult.is_finite())
      t.finite += b.mult.count();
    else
      t.infinite = true;
  }
  for (auto& [k, t] : m)
    if (t.infinite) t.finite = 0;
  return m;
}

}  // namespace

bool same_up_to_relabeling(const Signature& a, const Signature& b) {
  return coordinate_multiset(a) == coordinate_multiset(b);
}

}  // namespace mvf
