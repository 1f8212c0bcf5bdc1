#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mvf/element.hpp"
#include "mvf/frame.hpp"
#include "mvf/hom.hpp"
#include "mvf/lugroup.hpp"
#include "mvf/lukring.hpp"
#include "mvf/nucleus.hpp"
#include "mvf/signature.hpp"

namespace mvf {

using json = nlohmann::json;

// Algebra signatures: {"blocks":[{"kind":"chain","n":3,"mult":2},
// {"kind":"interval","mult":"inf"}]}.
json signature_to_json(const Signature& sig);
Signature signature_from_json(const json& j);

// Elements: {"defaults":["0","1/2"],"exceptions":{"0.1":"1/3"}} with one
// default per block, fractions as reduced strings, exception keys "block.index".
json element_to_json(const Element& x);
Element element_from_json(const Signature& sig, const json& j);

// Homomorphisms: {"indexMap":{"rule":...},"coordHoms":[...]} plus the two
// signatures. The rule is "identity", "constant:block.index", or an explicit
// per-target-block list with optional coordinate overrides; coordHoms is
// derived output naming the value-identity chain embedding per target block.
json hom_to_json(const ProductHom& h);
ProductHom hom_from_json(const json& j);

// Rings: {"factors":[{"p":2,"k":3}]}.
json ring_to_json(const FiniteRing& ring);
FiniteRing ring_from_json(const json& j);

// Groups with strong unit: signatures {"blocks":[{"unit":2,"mult":"inf"}]},
// elements as for algebras but with plain integer values.
json lu_signature_to_json(const LuSignature& sig);
LuSignature lu_signature_from_json(const json& j);
json lu_element_to_json(const LuElement& g);
LuElement lu_element_from_json(const LuSignature& sig, const json& j);

json classification_to_json(const FrameClassification& c);

// Compactness verdicts carry the refuting chain when negative: its shape,
// the term formula, the first few terms, and the mechanical checks run over
// a prefix of check_prefix terms.
json verdict_to_json(const CompactnessVerdict& v, std::uint64_t witness_terms = 8,
                     std::uint64_t check_prefix = 64);

// The four headline nucleus flags; the open inductivity case serializes as
// {"unknown": reason}.
json nucleus_classification_to_json(const NucleusClassification& c);

// File loading with parse failures mapped onto the input-error exit path.
json load_json_file(const std::string& path);

// Two-space indented dump with sorted keys and a trailing newline, the
// byte-stable form every command prints.
std::string dump_canonical(const json& j);

}  // namespace mvf
