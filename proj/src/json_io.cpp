#include "mvf/json_io.hpp"

#include <fstream>
#include <limits>

namespace mvf {

namespace {

std::string coord_key(std::size_t block, std::uint64_t index) {
  return std::to_string(block) + "." + std::to_string(index);
}

std::pair<std::size_t, std::uint64_t> parse_coord_key(const std::string& key) {
  std::size_t dot = key.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == key.size())
    throw ParseError("coordinate key '" + key + "' is not of the form block.index");
  try {
    std::size_t used = 0;
    std::size_t block = std::stoull(key.substr(0, dot), &used);
    if (used != dot) throw ParseError("");
    std::string rest = key.substr(dot + 1);
    std::uint64_t index = std::stoull(rest, &used);
    if (used != rest.size()) throw ParseError("");
    return {block, index};
  } catch (const std::exception&) {
    throw ParseError("coordinate key '" + key + "' is not of the form block.index");
  }
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

Multiplicity mult_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Multiplicity::infinite();
    throw ParseError("multiplicity must be a positive integer or \"inf\"");
  }
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0)
    throw ParseError("multiplicity must be a positive integer or \"inf\"");
  return Multiplicity::finite(j.get<std::uint64_t>());
}

json mult_to_json(const Multiplicity& m) {
  if (m.is_finite()) return m.count();
  return "inf";
}

Rat rat_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("fractions are written as strings like \"1/2\"");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string factor_name(const FactorKind& k) {
  if (k.is_unit_interval()) return "interval";
  return "chain:" + std::to_string(k.chain_size());
}

}  // namespace

json signature_to_json(const Signature& sig) {
  json blocks = json::array();
  for (const Block& b : sig.blocks()) {
    json jb;
    if (b.kind.is_chain()) {
      jb["kind"] = "chain";
      jb["n"] = b.kind.chain_size();
    } else {
      jb["kind"] = "interval";
    }
    jb["mult"] = mult_to_json(b.mult);
    blocks.push_back(std::move(jb));
  }
  return json{{"blocks", std::move(blocks)}};
}

Signature signature_from_json(const json& j) {
  const json& jblocks = field(j, "blocks");
  if (!jblocks.is_array() || jblocks.empty())
    throw ParseError("'blocks' must be a non-empty array");
  std::vector<Block> blocks;
  for (const json& jb : jblocks) {
    std::string kind = field(jb, "kind").get<std::string>();
    FactorKind k = FactorKind::unit_interval();
    if (kind == "chain") {
      const json& n = field(jb, "n");
      if (!n.is_number_integer() || n.get<long long>() < 2)
        throw ParseError("chain blocks need an integer size n of at least 2");
      if (n.get<long long>() > std::numeric_limits<int>::max())
        throw ParseError("chain size too large");
      k = FactorKind::chain(n.get<int>());
    } else if (kind != "interval") {
      throw ParseError("block kind must be \"chain\" or \"interval\"");
    }
    blocks.push_back({k, mult_from_json(field(jb, "mult"))});
  }
  return Signature(std::move(blocks));
}

json element_to_json(const Element& x) {
  json defaults = json::array();
  json exceptions = json::object();
  for (std::size_t b = 0; b < x.blocks().size(); ++b) {
    defaults.push_back(x.blocks()[b].def.str());
    for (const auto& [i, v] : x.blocks()[b].exceptions) exceptions[coord_key(b, i)] = v.str();
  }
  return json{{"defaults", std::move(defaults)}, {"exceptions", std::move(exceptions)}};
}

Element element_from_json(const Signature& sig, const json& j) {
  const json& jdef = field(j, "defaults");
  if (!jdef.is_array() || jdef.size() != sig.block_count())
    throw ParseError("'defaults' must list one value per block");
  std::vector<Element::BlockValues> values(sig.block_count());
  for (std::size_t b = 0; b < values.size(); ++b) values[b].def = rat_from_json(jdef[b]);
  if (auto it = j.find("exceptions"); it != j.end()) {
    if (!it->is_object()) throw ParseError("'exceptions' must map block.index keys to values");
    for (const auto& [key, val] : it->items()) {
      auto [block, index] = parse_coord_key(key);
      if (block >= sig.block_count())
        throw ParseError("exception key '" + key + "' names a missing block");
      values[block].exceptions.emplace_back(index, rat_from_json(val));
    }
  }
  try {
    return Element::make(sig, std::move(values));
  } catch (const BadParameter& e) {
    throw ParseError(e.what());
  }
}

json hom_to_json(const ProductHom& h) {
  json out;
  out["source"] = signature_to_json(h.source());
  out["target"] = signature_to_json(h.target());

  bool identity_shaped = h.overrides().empty() &&
                         h.source().block_count() == h.target().block_count();
  if (identity_shaped)
    for (std::size_t tb = 0; tb < h.rules().size(); ++tb)
      if (h.rules()[tb].kind != IndexRule::Kind::SameIndex || h.rules()[tb].source_block != tb)
        identity_shaped = false;
  bool constant_shaped = h.overrides().empty() && !h.rules().empty();
  if (constant_shaped)
    for (const IndexRule& r : h.rules())
      if (r.kind != IndexRule::Kind::ConstIndex || !(r.source_block == h.rules()[0].source_block &&
                                                     r.source_index == h.rules()[0].source_index))
        constant_shaped = false;

  if (identity_shaped) {
    out["indexMap"] = json{{"rule", "identity"}};
  } else if (constant_shaped) {
    out["indexMap"] = json{
        {"rule", "constant:" + coord_key(h.rules()[0].source_block, h.rules()[0].source_index)}};
  } else {
    json blocks = json::array();
    for (const IndexRule& r : h.rules()) {
      if (r.kind == IndexRule::Kind::SameIndex)
        blocks.push_back(json{{"rule", "same"}, {"source", r.source_block}});
      else
        blocks.push_back(
            json{{"rule", "const"}, {"read", coord_key(r.source_block, r.source_index)}});
    }
    json rule = json{{"rule", "explicit"}, {"blocks", std::move(blocks)}};
    if (!h.overrides().empty()) {
      json ov = json::object();
      for (const auto& [tc, sc] : h.overrides())
        ov[coord_key(tc.first, tc.second)] = coord_key(sc.first, sc.second);
      rule["overrides"] = std::move(ov);
    }
    out["indexMap"] = std::move(rule);
  }

  json coord_homs = json::array();
  for (std::size_t tb = 0; tb < h.rules().size(); ++tb)
    coord_homs.push_back(json{{"target", tb},
                              {"from", factor_name(h.source().blocks()[h.rules()[tb].source_block].kind)},
                              {"to", factor_name(h.target().blocks()[tb].kind)},
                              {"map", "value-identity"}});
  out["coordHoms"] = std::move(coord_homs);
  return out;
}

ProductHom hom_from_json(const json& j) {
  Signature source = signature_from_json(field(j, "source"));
  Signature target = signature_from_json(field(j, "target"));
  const json& index_map = field(j, "indexMap");
  const json& jrule = field(index_map, "rule");

  std::vector<IndexRule> rules;
  std::map<CoordRef, CoordRef> overrides;
  if (jrule.is_string() && jrule.get<std::string>() == "identity") {
    if (source.block_count() != target.block_count())
      throw ParseError("identity rule needs matching block counts");
    for (std::size_t tb = 0; tb < target.block_count(); ++tb)
      rules.push_back({IndexRule::Kind::SameIndex, tb, 0});
  } else if (jrule.is_string() && jrule.get<std::string>().rfind("constant:", 0) == 0) {
    auto [block, index] = parse_coord_key(jrule.get<std::string>().substr(9));
    rules.assign(target.block_count(), {IndexRule::Kind::ConstIndex, block, index});
  } else if (jrule.is_string() && jrule.get<std::string>() == "explicit") {
    const json& jblocks = field(index_map, "blocks");
    if (!jblocks.is_array() || jblocks.size() != target.block_count())
      throw ParseError("'blocks' must list one rule per target block");
    for (const json& jb : jblocks) {
      std::string kind = field(jb, "rule").get<std::string>();
      if (kind == "same") {
        rules.push_back({IndexRule::Kind::SameIndex,
                         field(jb, "source").get<std::size_t>(), 0});
      } else if (kind == "const") {
        auto [block, index] = parse_coord_key(field(jb, "read").get<std::string>());
        rules.push_back({IndexRule::Kind::ConstIndex, block, index});
      } else {
        throw ParseError("block rule must be \"same\" or \"const\"");
      }
    }
    if (auto it = index_map.find("overrides"); it != index_map.end())
      for (const auto& [key, val] : it->items())
        overrides[parse_coord_key(key)] = parse_coord_key(val.get<std::string>());
  } else {
    throw ParseError("indexMap rule must be \"identity\", \"constant:block.index\", or \"explicit\"");
  }

  if (auto it = j.find("coordHoms"); it != j.end())
    for (const json& jc : *it)
      if (field(jc, "map").get<std::string>() != "value-identity")
        throw ParseError("only value-identity coordinate homomorphisms are representable");

  try {
    return ProductHom(std::move(source), std::move(target), std::move(rules),
                      std::move(overrides));
  } catch (const BadParameter& e) {
    throw ParseError(e.what());
  }
}

json ring_to_json(const FiniteRing& ring) {
  json factors = json::array();
  for (const ChainRingFactor& f : ring.factors())
    factors.push_back(json{{"p", f.p}, {"k", f.k}});
  return json{{"factors", std::move(factors)}};
}

FiniteRing ring_from_json(const json& j) {
  const json& jf = field(j, "factors");
  if (!jf.is_array() || jf.empty()) throw ParseError("'factors' must be a non-empty array");
  std::vector<ChainRingFactor> factors;
  for (const json& f : jf) {
    const json& p = field(f, "p");
    const json& k = field(f, "k");
    if (!p.is_number_integer() || !k.is_number_integer())
      throw ParseError("ring factors need integer fields p and k");
    factors.push_back({p.get<long long>(), k.get<int>()});
  }
  try {
    return FiniteRing(std::move(factors));
  } catch (const BadParameter& e) {
    throw ParseError(e.what());
  }
}

json lu_signature_to_json(const LuSignature& sig) {
  json blocks = json::array();
  for (const LuBlock& b : sig.blocks())
    blocks.push_back(json{{"unit", b.unit}, {"mult", mult_to_json(b.mult)}});
  return json{{"blocks", std::move(blocks)}};
}

LuSignature lu_signature_from_json(const json& j) {
  const json& jblocks = field(j, "blocks");
  if (!jblocks.is_array() || jblocks.empty())
    throw ParseError("'blocks' must be a non-empty array");
  std::vector<LuBlock> blocks;
  for (const json& jb : jblocks) {
    const json& unit = field(jb, "unit");
    if (!unit.is_number_integer() || unit.get<long long>() < 1)
      throw ParseError("unit must be a positive integer");
    blocks.push_back({unit.get<long long>(), mult_from_json(field(jb, "mult"))});
  }
  return LuSignature(std::move(blocks));
}

json lu_element_to_json(const LuElement& g) {
  json defaults = json::array();
  json exceptions = json::object();
  for (std::size_t b = 0; b < g.blocks().size(); ++b) {
    defaults.push_back(g.blocks()[b].def);
    for (const auto& [i, v] : g.blocks()[b].exceptions) exceptions[coord_key(b, i)] = v;
  }
  return json{{"defaults", std::move(defaults)}, {"exceptions", std::move(exceptions)}};
}

LuElement lu_element_from_json(const LuSignature& sig, const json& j) {
  const json& jdef = field(j, "defaults");
  if (!jdef.is_array() || jdef.size() != sig.block_count())
    throw ParseError("'defaults' must list one integer per block");
  std::vector<LuElement::BlockValues> values(sig.block_count());
  for (std::size_t b = 0; b < values.size(); ++b) {
    if (!jdef[b].is_number_integer()) throw ParseError("group values are plain integers");
    values[b].def = jdef[b].get<long long>();
  }
  if (auto it = j.find("exceptions"); it != j.end()) {
    for (const auto& [key, val] : it->items()) {
      auto [block, index] = parse_coord_key(key);
      if (block >= sig.block_count())
        throw ParseError("exception key '" + key + "' names a missing block");
      if (!val.is_number_integer()) throw ParseError("group values are plain integers");
      values[block].exceptions.emplace_back(index, val.get<long long>());
    }
  }
  try {
    return LuElement::make(sig, std::move(values));
  } catch (const BadParameter& e) {
    throw ParseError(e.what());
  }
}

json classification_to_json(const FrameClassification& c) {
  return json{{"algebraic", c.algebraic},
              {"coherent", c.coherent},
              {"regular", c.regular},
              {"fip", c.fip},
              {"isPowersetAlgebra", c.is_powerset_algebra}};
}

json verdict_to_json(const CompactnessVerdict& v, std::uint64_t witness_terms,
                     std::uint64_t check_prefix) {
  json out{{"compact", v.compact}};
  if (v.witness) {
    const ChainWitness& w = *v.witness;
    json jw;
    jw["kind"] =
        w.kind == ChainWitness::Kind::RationalRamp ? "rationalRamp" : "exhaustFiniteSupport";
    jw["block"] = w.block;
    if (w.kind == ChainWitness::Kind::RationalRamp) {
      jw["index"] = w.index;
      jw["limit"] = w.limit.str();
    }
    jw["formula"] = w.formula;
    jw["declaredSup"] = element_to_json(w.declared_sup);
    json terms = json::array();
    for (std::uint64_t n = 1; n <= witness_terms; ++n) terms.push_back(element_to_json(w.term(n)));
    jw["terms"] = std::move(terms);
    WitnessCheck check = check_witness(w, check_prefix);
    jw["checked"] = json{{"monotone", check.monotone},
                         {"supDominates", check.sup_dominates},
                         {"noTermDominates", check.no_term_dominates}};
    out["witness"] = std::move(jw);
  }
  return out;
}

json nucleus_classification_to_json(const NucleusClassification& c) {
  json inductive;
  if (c.inductive.is_true())
    inductive = true;
  else if (c.inductive.is_false())
    inductive = false;
  else
    inductive = json{{"unknown", c.inductive.reason}};
  return json{{"isNucleus", c.is_nucleus()},
              {"isDense", c.dense},
              {"isInductive", std::move(inductive)},
              {"isMVType", c.mv_type}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace mvf
