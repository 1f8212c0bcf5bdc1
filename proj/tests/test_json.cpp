#include <vector>

#include "doctest.h"
#include "mvf/errors.hpp"
#include "mvf/json_io.hpp"

using namespace mvf;

namespace {

Signature mixed_signature() {
  return Signature({{FactorKind::chain(3), Multiplicity::finite(2)},
                    {FactorKind::chain(4), Multiplicity::infinite()},
                    {FactorKind::unit_interval(), Multiplicity::finite(1)}});
}

}  // namespace

TEST_CASE("signatures survive the round trip byte for byte") {
  Signature sig = mixed_signature();
  json j = signature_to_json(sig);
  CHECK(signature_from_json(j) == sig);
  CHECK(dump_canonical(signature_to_json(signature_from_json(j))) == dump_canonical(j));

  CHECK(j["blocks"][0]["kind"] == "chain");
  CHECK(j["blocks"][0]["n"] == 3);
  CHECK(j["blocks"][1]["mult"] == "inf");
  CHECK(j["blocks"][2]["kind"] == "interval");
}

TEST_CASE("malformed signatures are parse errors") {
  CHECK_THROWS_AS(signature_from_json(json::parse(R"({"blocks":[{"kind":"ring"}]})")), ParseError);
  CHECK_THROWS_AS(signature_from_json(json::parse(R"({"blocks":[{"kind":"chain","mult":1}]})")),
                  ParseError);
  CHECK_THROWS_AS(
      signature_from_json(json::parse(R"({"blocks":[{"kind":"chain","n":1,"mult":1}]})")),
      ParseError);
  CHECK_THROWS_AS(
      signature_from_json(json::parse(R"({"blocks":[{"kind":"chain","n":3,"mult":0}]})")),
      ParseError);
  CHECK_THROWS_AS(signature_from_json(json::parse(R"({})")), ParseError);
}

TEST_CASE("elements serialize defaults and exceptions with fraction strings") {
  Signature sig = mixed_signature();
  Element x = Element::zero(sig)
                  .with_coord(0, 1, Rat(1, 2))
                  .with_coord(1, 6, Rat(2, 3))
                  .with_coord(2, 0, Rat(1, 3));
  json j = element_to_json(x);
  CHECK(j["defaults"][0] == "0");
  CHECK(j["exceptions"]["0.1"] == "1/2");
  CHECK(j["exceptions"]["1.6"] == "2/3");
  CHECK(element_from_json(sig, j) == x);
  CHECK(dump_canonical(element_to_json(element_from_json(sig, j))) == dump_canonical(j));
}

TEST_CASE("element parsing validates keys and values") {
  Signature sig = mixed_signature();
  auto parse = [&](const char* text) { return element_from_json(sig, json::parse(text)); };
  CHECK_THROWS_AS(parse(R"({"defaults":["0"]})"), ParseError);  // one default per block
  CHECK_THROWS_AS(parse(R"({"defaults":["0","0","0"],"exceptions":{"9.0":"1"}})"), Error);
  CHECK_THROWS_AS(parse(R"({"defaults":["0","0","0"],"exceptions":{"0.x":"1"}})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"defaults":["0","0","0"],"exceptions":{"0.0":"5/3"}})"), Error);
  CHECK_THROWS_AS(parse(R"({"defaults":["1/3","0","0"]})"), Error);  // not an L_3 value
}

TEST_CASE("homomorphisms round-trip through each rule form") {
  Signature src({{FactorKind::chain(3), Multiplicity::finite(2)},
                 {FactorKind::chain(3), Multiplicity::infinite()}});

  SUBCASE("identity") {
    ProductHom h = ProductHom::identity(src);
    json j = hom_to_json(h);
    CHECK(j["indexMap"]["rule"] == "identity");
    ProductHom back = hom_from_json(j);
    CHECK(back.source() == h.source());
    CHECK(back.target() == h.target());
    CHECK(back.rules() == h.rules());
    CHECK(dump_canonical(hom_to_json(back)) == dump_canonical(j));
  }

  SUBCASE("constant") {
    Signature tgt({{FactorKind::chain(5), Multiplicity::infinite()}});
    ProductHom h(src, tgt, {IndexRule{IndexRule::Kind::ConstIndex, 0, 1}});
    json j = hom_to_json(h);
    CHECK(j["indexMap"]["rule"] == "constant:0.1");
    ProductHom back = hom_from_json(j);
    CHECK(back.rules() == h.rules());
    CHECK(dump_canonical(hom_to_json(back)) == dump_canonical(j));
  }

  SUBCASE("explicit blocks with overrides") {
    Signature tgt({{FactorKind::chain(3), Multiplicity::finite(2)},
                   {FactorKind::chain(5), Multiplicity::finite(4)}});
    ProductHom h(src, tgt,
                 {IndexRule{IndexRule::Kind::SameIndex, 0, 0},
                  IndexRule{IndexRule::Kind::ConstIndex, 1, 3}},
                 {{{1, 2}, {0, 1}}});
    json j = hom_to_json(h);
    CHECK(j["indexMap"]["rule"] == "explicit");
    ProductHom back = hom_from_json(j);
    CHECK(back.rules() == h.rules());
    CHECK(back.overrides() == h.overrides());
    CHECK(dump_canonical(hom_to_json(back)) == dump_canonical(j));
    // The derived per-block chain maps name the value identity.
    CHECK(j["coordHoms"][1]["map"] == "value-identity");
  }
}

TEST_CASE("homomorphism parsing rejects broken maps") {
  Signature src({{FactorKind::chain(3), Multiplicity::finite(1)}});
  json j = hom_to_json(ProductHom::identity(src));
  json bad = j;
  bad["indexMap"]["rule"] = "transpose";
  CHECK_THROWS_AS(hom_from_json(bad), ParseError);
  bad = j;
  bad["coordHoms"][0]["map"] = "collapse";
  CHECK_THROWS_AS(hom_from_json(bad), ParseError);
  bad = j;
  bad["target"]["blocks"][0]["n"] = 4;  // 2 does not divide 3
  CHECK_THROWS_AS(hom_from_json(bad), Error);
}

TEST_CASE("rings and their lattices round-trip") {
  FiniteRing ring({{2, 3}, {3, 2}});
  json j = ring_to_json(ring);
  CHECK(j["factors"][0]["p"] == 2);
  CHECK(j["factors"][0]["k"] == 3);
  CHECK(ring_from_json(j) == ring);
  CHECK(dump_canonical(ring_to_json(ring_from_json(j))) == dump_canonical(j));
  CHECK_THROWS_AS(ring_from_json(json::parse(R"({"factors":[{"p":6,"k":1}]})")), Error);
  CHECK_THROWS_AS(ring_from_json(json::parse(R"({"factors":[]})")), Error);
}

TEST_CASE("group signatures and elements round-trip with integer values") {
  LuSignature g({{2, Multiplicity::finite(2)}, {3, Multiplicity::infinite()}});
  json js = lu_signature_to_json(g);
  CHECK(js["blocks"][0]["unit"] == 2);
  CHECK(js["blocks"][1]["mult"] == "inf");
  CHECK(lu_signature_from_json(js) == g);

  LuElement a = LuElement::zero(g).with_coord(1, 7, 2).with_coord(1, 9, -4);
  json je = lu_element_to_json(a);
  CHECK(je["defaults"] == json::array({0, 0}));
  CHECK(je["exceptions"] == json{{"1.7", 2}, {"1.9", -4}});
  CHECK(lu_element_from_json(g, je) == a);
  CHECK(dump_canonical(lu_element_to_json(lu_element_from_json(g, je))) == dump_canonical(je));
}

TEST_CASE("classification and nucleus reports serialize their flags") {
  json c = classification_to_json(classify(Signature({{FactorKind::chain(3), Multiplicity::finite(1)},
                                                      {FactorKind::chain(4), Multiplicity::finite(1)}})));
  CHECK(c["algebraic"] == true);
  CHECK(c["coherent"] == true);
  CHECK(c["regular"] == false);
  CHECK(c["fip"] == true);
  CHECK(c["isPowersetAlgebra"] == false);

  NucleusClassification nc =
      classify_nucleus(NucleusSpec::ceiling(Signature({{FactorKind::unit_interval(), Multiplicity::finite(1)}})));
  json nj = nucleus_classification_to_json(nc);
  CHECK(nj["isNucleus"] == true);
  CHECK(nj["isDense"] == true);
  CHECK(nj["isInductive"] == false);
  CHECK(nj["isMVType"] == true);
  CHECK(nj.size() == 4);
}

TEST_CASE("negative verdicts serialize a machine-checked witness") {
  Signature sig({{FactorKind::chain(2), Multiplicity::infinite()}});
  CompactnessVerdict v = is_compact(Element::one(sig));
  json j = verdict_to_json(v, 8, 64);
  CHECK(j["compact"] == false);
  CHECK(j["witness"]["kind"] == "exhaustFiniteSupport");
  CHECK(j["witness"]["terms"].size() == 8);
  CHECK(j["witness"]["checked"]["monotone"] == true);
  CHECK(j["witness"]["checked"]["supDominates"] == true);
  CHECK(j["witness"]["checked"]["noTermDominates"] == true);

  json jc = verdict_to_json(is_compact(Element::zero(sig)), 8, 64);
  CHECK(jc["compact"] == true);
  CHECK_FALSE(jc.contains("witness"));

  Signature line({{FactorKind::unit_interval(), Multiplicity::finite(1)}});
  json jr = verdict_to_json(is_compact(Element::constant(line, Rat(1, 2))), 4, 32);
  CHECK(jr["witness"]["kind"] == "rationalRamp");
  CHECK(jr["witness"]["terms"].size() == 4);
}

TEST_CASE("canonical dumps are byte-stable") {
  json j = json::parse(R"({"b":1,"a":{"d":[1,2],"c":"x"}})");
  std::string once = dump_canonical(j);
  CHECK(once == dump_canonical(json::parse(once)));
  CHECK(once.back() == '\n');
  CHECK(once.find("\"a\"") < once.find("\"b\""));
}

TEST_CASE("file loading separates missing files from bad content") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), Error);
}
