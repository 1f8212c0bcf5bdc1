// Python bindings: a thin JSON-string facade over the C++ library. Each
// function takes and returns the same JSON documents the command-line tool
// uses; the Python package wraps them with dict-based helpers.

#include <pybind11/pybind11.h>

#include "mvf/json_io.hpp"

namespace py = pybind11;

namespace {

mvf::json parse(const std::string& text) {
  try {
    return mvf::json::parse(text);
  } catch (const mvf::json::parse_error& e) {
    throw mvf::ParseError(e.what());
  }
}

std::string classify_json(const std::string& spec) {
  mvf::Signature sig = mvf::signature_from_json(parse(spec));
  return mvf::dump_canonical(mvf::classification_to_json(mvf::classify(sig)));
}

std::string compact_json(const std::string& spec, const std::string& element,
                         std::uint64_t witness_prefix) {
  mvf::Signature sig = mvf::signature_from_json(parse(spec));
  mvf::Element x = mvf::element_from_json(sig, parse(element));
  return mvf::dump_canonical(mvf::verdict_to_json(mvf::is_compact(x), 8, witness_prefix));
}

std::string nucleus_json(const std::string& spec, const std::string& kind, std::uint64_t seed) {
  mvf::Signature sig = mvf::signature_from_json(parse(spec));
  std::string name = kind;
  std::optional<mvf::Rat> param;
  if (std::size_t colon = kind.find(':'); colon != std::string::npos) {
    name = kind.substr(0, colon);
    param = mvf::Rat::parse(kind.substr(colon + 1));
  }
  mvf::CheckOptions opts;
  opts.seed = seed;
  mvf::NucleusClassification c = mvf::classify_nucleus(mvf::builtin_nucleus(name, sig, param), opts);
  return mvf::dump_canonical(mvf::nucleus_classification_to_json(c));
}

std::string hom_check_json(const std::string& hom) {
  mvf::ProductHom h = mvf::hom_from_json(parse(hom));
  mvf::CoherenceEquivalenceReport r = mvf::coherence_equivalence(h);
  mvf::json out{{"coherent", r.coherent},
                {"complete", r.complete},
                {"preservesMaxCompact", r.preserves_max_compact},
                {"equivalent", r.equivalent}};
  if (r.counterexample) out["counterexample"] = mvf::element_to_json(*r.counterexample);
  return mvf::dump_canonical(out);
}

std::string hom_apply_json(const std::string& hom, const std::string& element) {
  mvf::ProductHom h = mvf::hom_from_json(parse(hom));
  mvf::Element x = mvf::element_from_json(h.source(), parse(element));
  return mvf::dump_canonical(mvf::element_to_json(h.apply(x)));
}

std::string ring_radicals_json(const std::string& ring_spec) {
  mvf::FiniteRing ring = mvf::ring_from_json(parse(ring_spec));
  mvf::json rows = mvf::json::array();
  for (const mvf::RingIdeal& ideal : mvf::enumerate_ideals(ring)) {
    mvf::RingIdeal rad = mvf::radical_ideal(ideal);
    rows.push_back(mvf::json{{"ideal", ideal.generator_string()},
                             {"radical", rad.generator_string()},
                             {"frame", mvf::element_to_json(mvf::ideal_to_element(ideal))},
                             {"frameRadical", mvf::element_to_json(mvf::ideal_to_element(rad))}});
  }
  return mvf::dump_canonical(mvf::json{{"ring", mvf::ring_to_json(ring)}, {"radicals", rows}});
}

std::string ring_mv_check_json(const std::string& ring_spec, std::uint64_t seed) {
  mvf::FiniteRing ring = mvf::ring_from_json(parse(ring_spec));
  mvf::CheckOptions opts;
  opts.seed = seed;
  mvf::RingFrameOracleReport oracle = mvf::verify_ring_frame_oracle(ring, opts);
  mvf::RadicalNucleusReport nucleus = mvf::radical_nucleus_report(ring, opts);
  mvf::json out{{"ring", mvf::ring_to_json(ring)},
                {"orderIso", oracle.order_iso},
                {"negMatchesAnnihilator", oracle.neg_matches},
                {"oplusMatches", oracle.oplus_matches},
                {"radicalMatches", oracle.radical_matches},
                {"radicalNucleus", mvf::nucleus_classification_to_json(nucleus.classification)},
                {"denseIffAllExponentsOne", nucleus.dense_matches},
                {"fixedPointsClosedForm", nucleus.fixed_points_closed_form},
                {"mvSubalgebraIffAllChainsTwo", nucleus.mv_subalgebra_matches}};
  return mvf::dump_canonical(out);
}

std::string gamma_json(const std::string& group_spec) {
  mvf::LuSignature lusig = mvf::lu_signature_from_json(parse(group_spec));
  return mvf::dump_canonical(mvf::signature_to_json(mvf::gamma(lusig)));
}

std::string phi_json(const std::string& spec) {
  mvf::Signature sig = mvf::signature_from_json(parse(spec));
  return mvf::dump_canonical(mvf::lu_signature_to_json(mvf::phi(sig)));
}

std::string lu_compact_json(const std::string& group_spec, const std::string& element,
                            std::uint64_t witness_prefix) {
  mvf::LuSignature lusig = mvf::lu_signature_from_json(parse(group_spec));
  mvf::LuElement g = mvf::lu_element_from_json(lusig, parse(element));
  return mvf::dump_canonical(mvf::verdict_to_json(mvf::is_lu_compact(g), 8, witness_prefix));
}

std::string binary_op_json(const std::string& spec, const std::string& xs, const std::string& ys,
                           const char* op) {
  mvf::Signature sig = mvf::signature_from_json(parse(spec));
  mvf::Element x = mvf::element_from_json(sig, parse(xs));
  mvf::Element y = mvf::element_from_json(sig, parse(ys));
  std::string name(op);
  mvf::Element r = name == "oplus"  ? mvf::oplus(x, y)
                   : name == "join" ? mvf::join(x, y)
                                    : mvf::meet(x, y);
  return mvf::dump_canonical(mvf::element_to_json(r));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "products of Lukasiewicz chains: classification, compactness, nuclei, "
            "ideal lattices, and groups with strong unit";

  py::register_exception<mvf::Error>(m, "MvfError");

  m.def("classify_json", &classify_json, py::arg("spec"),
        "classification report for a signature JSON document");
  m.def("compact_json", &compact_json, py::arg("spec"), py::arg("element"),
        py::arg("witness_prefix") = 64,
        "compactness verdict with a machine-checked witness when negative");
  m.def("nucleus_json", &nucleus_json, py::arg("spec"), py::arg("kind"), py::arg("seed") = 0,
        "classification of a built-in nucleus, e.g. 'ceiling' or 'threshold:1/2'");
  m.def("hom_check_json", &hom_check_json, py::arg("hom"),
        "coherence versus completeness report for a product homomorphism");
  m.def("hom_apply_json", &hom_apply_json, py::arg("hom"), py::arg("element"),
        "image of an element under a product homomorphism");
  m.def("ring_radicals_json", &ring_radicals_json, py::arg("ring"),
        "radical of every ideal of a product of Z/p^k, ring-side and frame-side");
  m.def("ring_mv_check_json", &ring_mv_check_json, py::arg("ring"), py::arg("seed") = 0,
        "agreement of ring ideal operations with the chain-product MV-structure");
  m.def("gamma_json", &gamma_json, py::arg("group"),
        "unit interval of a group with strong unit, as a chain-product signature");
  m.def("phi_json", &phi_json, py::arg("spec"),
        "integer group with strong unit whose unit interval is the given algebra");
  m.def("lu_compact_json", &lu_compact_json, py::arg("group"), py::arg("element"),
        py::arg("witness_prefix") = 64, "group-side compactness of |g| capped at the unit");
  m.def("oplus_json", [](const std::string& s, const std::string& x, const std::string& y) {
          return binary_op_json(s, x, y, "oplus");
        }, py::arg("spec"), py::arg("x"), py::arg("y"), "truncated sum of two elements");
  m.def("join_json", [](const std::string& s, const std::string& x, const std::string& y) {
          return binary_op_json(s, x, y, "join");
        }, py::arg("spec"), py::arg("x"), py::arg("y"), "lattice join of two elements");
  m.def("meet_json", [](const std::string& s, const std::string& x, const std::string& y) {
          return binary_op_json(s, x, y, "meet");
        }, py::arg("spec"), py::arg("x"), py::arg("y"), "lattice meet of two elements");
  m.def("neg_json", [](const std::string& s, const std::string& xs) {
          mvf::Signature sig = mvf::signature_from_json(parse(s));
          mvf::Element x = mvf::element_from_json(sig, parse(xs));
          return mvf::dump_canonical(mvf::element_to_json(mvf::neg(x)));
        }, py::arg("spec"), py::arg("x"), "involution of an element");
  m.def("pseudocomplement_json", [](const std::string& s, const std::string& xs) {
          mvf::Signature sig = mvf::signature_from_json(parse(s));
          mvf::Element x = mvf::element_from_json(sig, parse(xs));
          return mvf::dump_canonical(mvf::element_to_json(mvf::pseudocomplement(x)));
        }, py::arg("spec"), py::arg("x"), "largest element meeting x in 0");
  m.def("leq", [](const std::string& s, const std::string& xs, const std::string& ys) {
          mvf::Signature sig = mvf::signature_from_json(parse(s));
          return mvf::leq(mvf::element_from_json(sig, parse(xs)),
                          mvf::element_from_json(sig, parse(ys)));
        }, py::arg("spec"), py::arg("x"), py::arg("y"), "order comparison of two elements");
}
