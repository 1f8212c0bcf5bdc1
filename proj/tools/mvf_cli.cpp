// Command-line front end: classify product algebras, test compactness with
// witnesses, classify nuclei, inspect ring ideal lattices, move between
// groups and algebras, and draw Hasse diagrams.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mvf/json_io.hpp"

namespace {

struct GlobalFlags {
  std::uint64_t seed = 0;
  std::uint64_t bound = mvf::kDefaultEnumBound;
  std::uint64_t witness_prefix = 64;
  bool as_json = false;
  std::string out_path;
};

mvf::CheckOptions options_from(const GlobalFlags& flags) {
  mvf::CheckOptions opts;
  opts.enum_bound = flags.bound;
  opts.witness_prefix = flags.witness_prefix;
  opts.seed = flags.seed;
  return opts;
}

void emit(const GlobalFlags& flags, const std::string& text) {
  if (flags.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(flags.out_path);
  if (!out) throw mvf::BadParameter("cannot write to " + flags.out_path);
  out << text;
}

std::string run_classify(const GlobalFlags& flags, const std::string& spec_path) {
  mvf::Signature sig = mvf::signature_from_json(mvf::load_json_file(spec_path));
  return mvf::dump_canonical(mvf::classification_to_json(mvf::classify(sig)));
}

std::string run_compact(const GlobalFlags& flags, const std::string& spec_path,
                        const std::string& element_path) {
  mvf::Signature sig = mvf::signature_from_json(mvf::load_json_file(spec_path));
  mvf::Element x = mvf::element_from_json(sig, mvf::load_json_file(element_path));
  mvf::CompactnessVerdict v = mvf::is_compact(x);
  return mvf::dump_canonical(mvf::verdict_to_json(v, 8, flags.witness_prefix));
}

std::string run_nucleus(const GlobalFlags& flags, const std::string& spec_path,
                        const std::string& nucleus_spec) {
  mvf::Signature sig = mvf::signature_from_json(mvf::load_json_file(spec_path));
  std::string name = nucleus_spec;
  std::optional<mvf::Rat> param;
  if (std::size_t colon = nucleus_spec.find(':'); colon != std::string::npos) {
    name = nucleus_spec.substr(0, colon);
    param = mvf::Rat::parse(nucleus_spec.substr(colon + 1));
  }
  mvf::NucleusSpec spec = mvf::builtin_nucleus(name, sig, param);
  mvf::NucleusClassification c = mvf::classify_nucleus(spec, options_from(flags));
  return mvf::dump_canonical(mvf::nucleus_classification_to_json(c));
}

std::string run_ring(const GlobalFlags& flags, const std::string& ring_path, bool mv_check) {
  mvf::FiniteRing ring = mvf::ring_from_json(mvf::load_json_file(ring_path));
  mvf::CheckOptions opts = options_from(flags);

  if (mv_check) {
    mvf::RingFrameOracleReport oracle = mvf::verify_ring_frame_oracle(ring, opts);
    mvf::RadicalNucleusReport nucleus = mvf::radical_nucleus_report(ring, opts);
    mvf::json report{{"ring", mvf::ring_to_json(ring)},
                     {"orderIso", oracle.order_iso},
                     {"negMatchesAnnihilator", oracle.neg_matches},
                     {"oplusMatches", oracle.oplus_matches},
                     {"radicalMatches", oracle.radical_matches},
                     {"pairsExhaustive", oracle.pairs_exhaustive},
                     {"radicalNucleus", mvf::nucleus_classification_to_json(nucleus.classification)},
                     {"denseIffAllExponentsOne", nucleus.dense_matches},
                     {"fixedPointsClosedForm", nucleus.fixed_points_closed_form},
                     {"mvSubalgebraIffAllChainsTwo", nucleus.mv_subalgebra_matches}};
    if (flags.as_json) return mvf::dump_canonical(report);
    std::string text = "ring " + ring.describe() + "\n";
    auto flag = [](bool b) { return b ? std::string("yes") : std::string("no"); };
    text += "  order isomorphism with the chain product: " + flag(oracle.order_iso) + "\n";
    text += "  negation matches annihilator: " + flag(oracle.neg_matches) + "\n";
    text += "  sum matches truncated addition: " + flag(oracle.oplus_matches) + "\n";
    text += "  radical matches closed form: " + flag(oracle.radical_matches) + "\n";
    text += "  radical is a nucleus: " + flag(nucleus.classification.is_nucleus()) + "\n";
    text += "  radical is inductive: " + flag(nucleus.classification.inductive.is_true()) + "\n";
    text += "  dense exactly when all exponents are 1: " + flag(nucleus.dense_matches) + "\n";
    text += "  fixed points follow the closed form: " + flag(nucleus.fixed_points_closed_form) + "\n";
    text += "  fixed points form an MV-subalgebra only when all chains are L_2: " +
            flag(nucleus.mv_subalgebra_matches) + "\n";
    return text;
  }

  std::vector<mvf::RingIdeal> ideals = mvf::enumerate_ideals(ring, flags.bound);
  mvf::Signature sig = mvf::ideal_lattice_signature(ring);
  if (flags.as_json) {
    mvf::json rows = mvf::json::array();
    for (const mvf::RingIdeal& ideal : ideals) {
      mvf::RingIdeal rad = mvf::radical_ideal(ideal);
      rows.push_back(mvf::json{{"ideal", ideal.generator_string()},
                               {"radical", rad.generator_string()},
                               {"frame", mvf::element_to_json(mvf::ideal_to_element(ideal))},
                               {"frameRadical", mvf::element_to_json(mvf::ideal_to_element(rad))}});
    }
    return mvf::dump_canonical(mvf::json{{"ring", mvf::ring_to_json(ring)}, {"radicals", rows}});
  }
  auto frame_str = [&](const mvf::RingIdeal& ideal) {
    mvf::Element x = mvf::ideal_to_element(ideal);
    std::string s;
    for (std::size_t b = 0; b < x.blocks().size(); ++b) {
      if (b) s += ", ";
      s += x.at(b, 0).str();
    }
    return ring.factor_count() > 1 ? "(" + s + ")" : s;
  };
  std::string text = "ring " + ring.describe() + ", " + std::to_string(ideals.size()) + " ideals\n";
  for (const mvf::RingIdeal& ideal : ideals) {
    mvf::RingIdeal rad = mvf::radical_ideal(ideal);
    text += "sqrt(" + ideal.generator_string() + ") = " + rad.generator_string() + "  |  " +
            frame_str(ideal) + " -> " + frame_str(rad) + "\n";
  }
  return text;
}

std::string run_gamma(const GlobalFlags& flags, const std::string& path) {
  mvf::LuSignature lusig = mvf::lu_signature_from_json(mvf::load_json_file(path));
  mvf::GammaReport report = mvf::gamma_verified(lusig, options_from(flags));
  if (!report.ops_agree || !report.axioms_hold)
    throw mvf::PropertyCheckFailure("induced interval operations disagree with the chain product");
  return mvf::dump_canonical(mvf::signature_to_json(report.sig));
}

std::string run_phi(const GlobalFlags& flags, const std::string& path) {
  mvf::Signature sig = mvf::signature_from_json(mvf::load_json_file(path));
  return mvf::dump_canonical(mvf::lu_signature_to_json(mvf::phi(sig)));
}

std::string run_hasse(const GlobalFlags& flags, const std::string& spec_path) {
  mvf::Signature sig = mvf::signature_from_json(mvf::load_json_file(spec_path));
  std::uint64_t limit = std::min<std::uint64_t>(flags.bound, 200);
  std::uint64_t n = sig.carrier_size(limit);
  std::vector<mvf::Element> xs = mvf::enumerate_elements(sig, n);

  auto label = [&](const mvf::Element& x) {
    std::string s;
    std::size_t coords = 0;
    for (std::size_t b = 0; b < sig.block_count(); ++b)
      for (std::uint64_t i = 0; i < sig.blocks()[b].mult.count(); ++i) {
        if (coords++) s += ", ";
        s += x.at(b, i).str();
      }
    return coords > 1 ? "(" + s + ")" : s;
  };

  std::string dot = "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < xs.size(); ++i)
    dot += "  n" + std::to_string(i) + " [label=\"" + label(xs[i]) + "\"];\n";
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j || !mvf::leq(xs[i], xs[j])) continue;
      bool covering = true;
      for (std::size_t k = 0; covering && k < xs.size(); ++k)
        if (k != i && k != j && mvf::leq(xs[i], xs[k]) && mvf::leq(xs[k], xs[j])) covering = false;
      if (covering) dot += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    }
  dot += "}\n";
  return dot;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational workbench for products of Lukasiewicz chains"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "seed for sampled checks");
  app.add_option("--bound", flags.bound, "enumeration bound for finite carriers");
  app.add_option("--witness-prefix", flags.witness_prefix, "witness terms to machine-check");
  app.add_flag("--json", flags.as_json, "emit JSON instead of text where text is the default");
  app.add_option("--out", flags.out_path, "write output to this file instead of stdout");

  std::string spec_path, element_path, nucleus_spec, ring_path, group_path;
  bool radical_mode = false, mv_check_mode = false;

  CLI::App* classify = app.add_subcommand("classify", "classify a product algebra");
  classify->add_option("spec", spec_path, "signature JSON file")->required();

  CLI::App* compact = app.add_subcommand("compact", "test an element for compactness");
  compact->add_option("spec", spec_path, "signature JSON file")->required();
  compact->add_option("element", element_path, "element JSON file")->required();

  CLI::App* nucleus = app.add_subcommand("nucleus", "classify a built-in nucleus");
  nucleus->add_option("spec", spec_path, "signature JSON file")->required();
  nucleus->add_option("kind", nucleus_spec, "nucleus kind, e.g. ceiling or threshold:1/2")
      ->required();

  CLI::App* ring = app.add_subcommand("ring", "inspect the ideal lattice of a product of Z/p^k");
  ring->add_option("ring", ring_path, "ring JSON file")->required();
  ring->add_flag("--radical", radical_mode, "print the radical of every ideal (default)");
  ring->add_flag("--mv-check", mv_check_mode, "verify the MV-structure against the chain product");

  CLI::App* gamma_cmd = app.add_subcommand("gamma", "unit interval of a group, as a chain product");
  gamma_cmd->add_option("group", group_path, "group signature JSON file")->required();

  CLI::App* phi_cmd = app.add_subcommand("phi", "integer group whose unit interval is the algebra");
  phi_cmd->add_option("spec", spec_path, "signature JSON file")->required();

  CLI::App* hasse = app.add_subcommand("hasse", "covering-relation diagram in DOT format");
  hasse->add_option("spec", spec_path, "signature JSON file")->required();

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) emit(flags, run_classify(flags, spec_path));
    if (compact->parsed()) emit(flags, run_compact(flags, spec_path, element_path));
    if (nucleus->parsed()) emit(flags, run_nucleus(flags, spec_path, nucleus_spec));
    if (ring->parsed()) {
      if (radical_mode && mv_check_mode)
        throw mvf::BadParameter("--radical and --mv-check are mutually exclusive");
      emit(flags, run_ring(flags, ring_path, mv_check_mode));
    }
    if (gamma_cmd->parsed()) emit(flags, run_gamma(flags, group_path));
    if (phi_cmd->parsed()) emit(flags, run_phi(flags, spec_path));
    if (hasse->parsed()) emit(flags, run_hasse(flags, spec_path));
  } catch (const mvf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
