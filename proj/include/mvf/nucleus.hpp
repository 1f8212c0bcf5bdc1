#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvf/frame.hpp"
#include "mvf/sampling.hpp"

namespace mvf {

enum class NucleusKind {
  Identity,
  ConstantOne,
  DoublePseudocomplement,
  Threshold,
  Parity,
  Halving,
  Ceiling,
  Radical,
  Table,
};

// A candidate nucleus: a self-map of one product algebra. Built-in kinds act
// coordinatewise; Table carries an explicit graph over an enumerable carrier.
class NucleusSpec {
 public:
  static NucleusSpec identity(const Signature& sig);
  static NucleusSpec constant_one(const Signature& sig);
  // x maps to the pseudocomplement of its pseudocomplement.
  static NucleusSpec double_pseudocomplement(const Signature& sig);
  // x maps to max(x, t0) pointwise; t0 must lie in every factor carrier.
  static NucleusSpec threshold(const Signature& sig, const Rat& t0);
  // Coordinates carry labels 2,3,4,... in block order; odd labels map to 1,
  // even labels are kept. Finite blocks take consecutive labels; infinite
  // blocks must come as a trailing pair taking the remaining even labels and
  // the remaining odd labels respectively.
  static NucleusSpec parity(const Signature& sig);
  // On a product of odd chains: k/(2n) maps to ceil(k/2)/n, i.e. odd
  // numerators are rounded up one step.
  static NucleusSpec halving(const Signature& sig);
  // 0 maps to 0, everything positive maps to 1.
  static NucleusSpec ceiling(const Signature& sig);
  // On chain products: values below 1 map to the coatom (n-2)/(n-1), 1 stays.
  static NucleusSpec radical(const Signature& sig);
  // Explicit graph; must cover the whole (enumerable) carrier.
  static NucleusSpec table(const Signature& sig, std::vector<std::pair<Element, Element>> graph);

  NucleusKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const Signature& algebra() const { return *sig_; }
  const std::shared_ptr<const Signature>& algebra_ptr() const { return sig_; }
  std::optional<Rat> threshold_value() const { return t0_; }

  Element apply(const Element& x) const;
  // True when the map factors through the coordinates.
  bool coordinatewise() const { return kind_ != NucleusKind::Table; }
  // Per-coordinate action, defined for coordinatewise kinds.
  Rat coord_map(std::size_t block, std::uint64_t index, const Rat& v) const;

 private:
  NucleusSpec(NucleusKind kind, std::string name, const Signature& sig)
      : kind_(kind), name_(std::move(name)), sig_(std::make_shared<const Signature>(sig)) {}

  // Label of a coordinate under the parity numbering.
  bool parity_label_odd(std::size_t block, std::uint64_t index) const;

  NucleusKind kind_;
  std::string name_;
  std::shared_ptr<const Signature> sig_;
  std::optional<Rat> t0_;
  std::map<Element, Element, ElementLess> table_;
  // Parity bookkeeping: first label of each finite block, and which trailing
  // infinite blocks (if any) hold the even/odd labels.
  std::vector<std::uint64_t> parity_start_;
  std::optional<std::size_t> even_tail_;
  std::optional<std::size_t> odd_tail_;
};

// Builder used by the CLI: kind by name, optional rational parameter.
NucleusSpec builtin_nucleus(const std::string& kind_name, const Signature& sig,
                            const std::optional<Rat>& param = std::nullopt);

// Three-valued answer with a stated method or obstruction.
struct Ternary {
  enum class Value { False, True, Unknown };
  Value value = Value::Unknown;
  std::string reason;
  static Ternary yes(std::string r) { return {Value::True, std::move(r)}; }
  static Ternary no(std::string r) { return {Value::False, std::move(r)}; }
  static Ternary unknown(std::string r) { return {Value::Unknown, std::move(r)}; }
  bool is_true() const { return value == Value::True; }
  bool is_false() const { return value == Value::False; }
  bool is_unknown() const { return value == Value::Unknown; }
};

struct NucleusClassification {
  bool extensive = false;
  bool monotone = false;
  bool idempotent = false;
  bool meet_law = false;  // j(x meet y) == j(x) meet j(y)
  bool is_nucleus() const { return extensive && monotone && idempotent && meet_law; }
  bool dense = false;  // j(0) == 0
  Ternary inductive;   // j(x) is the join of j over the compacts below x
  bool mv_type = false;  // fixed points closed under neg and oplus
  bool exhaustive = false;  // laws verified over the whole carrier
  std::string method;
  std::string fixed_points_text;
  std::optional<std::vector<Element>> fixed_points;
};

NucleusClassification classify_nucleus(const NucleusSpec& spec, const CheckOptions& opt = {});

// The image of a nucleus materialized as an algebra, with the checks that
// make it an algebraic frame: joins computed in the ambient algebra stay in
// the image, the image of the ambient compacts is exactly the compacts of the
// image, and the image decomposes as a product of finite chains.
struct NuclearAlgebra {
  std::vector<Element> fixed_points;
  bool joins_agree = false;
  bool algebraic = false;
  bool compacts_map_onto = false;
  std::vector<Element> atoms;  // atoms of the Boolean center of the image
  std::optional<Signature> recognized;
  std::string recognized_text;
};

// Requires the classification flags nucleus, mv-type and inductive; throws
// PreconditionFailed naming the failing flags, or CarrierTooLarge when the
// carrier cannot be materialized.
NuclearAlgebra nuclear_as_algebra(const NucleusSpec& spec, const CheckOptions& opt = {});

}  // namespace mvf
