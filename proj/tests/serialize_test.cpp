#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "reference_values.hpp"
#include "toda/diffop.hpp"
#include "toda/dsgauge.hpp"
#include "toda/serialize.hpp"

using namespace toda;
using testing::parse_poly;
using testing::random_poly;

namespace {

IntegralSet g2_quick() {
  const AlgebraSpec spec = AlgebraSpec::parse("G2");
  return extract_integrals(factorized_product(spec), spec);
}

}  // namespace

TEST_CASE("plain text rendering") {
  const Naming g2 = naming_for(AlgebraSpec::parse("G2"));
  const Naming a1 = naming_for(AlgebraSpec::parse("A1"));

  CHECK(to_text(parse_poly(testing::kA1QuickI1, testing::indexed_names(1), 1),
                a1) == "u1_2 - u1_1^2");
  CHECK(to_text(parse_poly(testing::kG2I1, testing::g2_names(), 2), g2) ==
        "6*u2 + 2*v2 - 6*u1^2 + 6*u1*v1 - 2*v1^2");

  CHECK(to_text(DiffPoly::zero(2), g2) == "0");
  CHECK(to_text(DiffPoly::constant(2, Rat(5)), g2) == "5");
  CHECK(to_text(DiffPoly::constant(2, Rat(-3)), g2) == "-3");
  CHECK(to_text(DiffPoly::constant(2, rat(5, 2)), g2) == "5/2");
  CHECK(to_text(rat(5, 2) * DiffPoly::jet(2, 0, 1), g2) == "5/2*u1");
  CHECK(to_text(-DiffPoly::jet(2, 0, 1), g2) == "-u1");
  CHECK(to_text(DiffPoly::jet(2, 1, 3) - DiffPoly::jet(2, 0, 1), g2) ==
        "-u1 + v3");
}

TEST_CASE("exponential factors in text") {
  const Naming g2 = naming_for(AlgebraSpec::parse("G2"));
  DiffPoly e1 = DiffPoly::exponential(2, 0);
  CHECK(to_text(e1, g2) == "exp(rho1)");
  CHECK(to_text(Rat(2) * (e1 * e1) * DiffPoly::exponential(2, 1), g2) ==
        "2*exp(2*rho1+rho2)");
  CHECK(to_text(DiffPoly::jet(2, 0, 1) * DiffPoly::exponential(2, 1), g2) ==
        "u1*exp(rho2)");
}

TEST_CASE("naming conventions per algebra") {
  CHECK(to_text(DiffPoly::jet(2, 1, 3), naming_for(AlgebraSpec::parse("G2"))) ==
        "v3");
  CHECK(to_text(DiffPoly::jet(4, 2, 3), naming_for(AlgebraSpec::parse("D4"))) ==
        "w3");
  CHECK(to_text(DiffPoly::jet(4, 3, 1), naming_for(AlgebraSpec::parse("D4"))) ==
        "z1");
  // Only the two recorded conventions are compact; D3 is indexed.
  CHECK(to_text(DiffPoly::jet(3, 2, 1), naming_for(AlgebraSpec::parse("D3"))) ==
        "u3_1");
  CHECK(to_text(DiffPoly::jet(2, 1, 1), naming_for(AlgebraSpec::parse("A2"))) ==
        "u2_1");
  CHECK(to_text(DiffPoly::jet(2, 0, 2), naming_for(AlgebraSpec::parse("B2"))) ==
        "u1_2");
}

TEST_CASE("integral sets render one labeled line per entry") {
  const AlgebraSpec a1 = AlgebraSpec::parse("A1");
  const IntegralSet set = extract_integrals(factorized_product(a1), a1);
  CHECK(to_text(set) == "I_1 = u1_2 - u1_1^2\n");

  const IntegralSet g2 = g2_quick();
  const std::string text = to_text(g2);
  CHECK(text.find("I_1 = 6*u2") == 0);
  CHECK(text.find("\nI_2 = ") != std::string::npos);
  CHECK(text.find("\nJ_1 = ") != std::string::npos);
  CHECK(text.find("\nJ_4 = ") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("latex rendering") {
  const Naming g2 = naming_for(AlgebraSpec::parse("G2"));
  const Naming a1 = naming_for(AlgebraSpec::parse("A1"));

  CHECK(to_latex(parse_poly(testing::kG2I1, testing::g2_names(), 2), g2) ==
        "6\\,u_2+2\\,v_2-6\\,{u_1}^2+6\\,u_1v_1-2\\,{v_1}^2");
  CHECK(to_latex(parse_poly(testing::kA1QuickI1, testing::indexed_names(1), 1),
                 a1) == "u^{1}_{2}-{u^{1}_{1}}^2");

  CHECK(to_latex(DiffPoly::zero(2), g2) == "0");
  CHECK(to_latex(rat(5, 2) * DiffPoly::jet(2, 0, 1), g2) ==
        "\\tfrac{5}{2}\\,u_1");
  CHECK(to_latex(rat(-1, 2) * DiffPoly::jet(2, 0, 1), g2) ==
        "-\\tfrac{1}{2}\\,u_1");
  CHECK(to_latex(DiffPoly::jet(2, 0, 10), g2) == "u_{10}");
  CHECK(to_latex(DiffPoly::jet(2, 0, 1, 10), g2) == "{u_1}^{10}");
  CHECK(to_latex(DiffPoly::exponential(2, 0), g2) == "e^{\\rho_1}");
  CHECK(to_latex(Rat(2) * DiffPoly::exponential(2, 0) *
                     DiffPoly::exponential(2, 0) * DiffPoly::exponential(2, 1),
                 g2) == "2\\,e^{2\\rho_1+\\rho_2}");

  const IntegralSet a1set =
      extract_integrals(factorized_product(AlgebraSpec::parse("A1")),
                        AlgebraSpec::parse("A1"));
  CHECK(to_latex(a1set) == "I_1 = u^{1}_{2}-{u^{1}_{1}}^2\n");
}

TEST_CASE("polynomial JSON schema") {
  const DiffPoly p =
      parse_poly(testing::kA1QuickI1, testing::indexed_names(1), 1);
  const nlohmann::json j = nlohmann::json::parse(to_json(p));
  CHECK(j.at("rank") == 1);
  REQUIRE(j.at("terms").size() == 2);
  CHECK(j["terms"][0]["coeff"] == "1");
  CHECK(j["terms"][0]["jets"] == nlohmann::json::array({{1, 2, 1}}));
  CHECK(j["terms"][0]["exp"] == nlohmann::json::array({0}));
  CHECK(j["terms"][1]["coeff"] == "-1");
  CHECK(j["terms"][1]["jets"] == nlohmann::json::array({{1, 1, 2}}));

  // Key order is pinned for byte-stable output.
  const std::string text = to_json(p);
  CHECK(text.find("\"rank\"") < text.find("\"terms\""));
  CHECK(text.find("\"coeff\"") < text.find("\"jets\""));
  CHECK(text.find("\"jets\"") < text.find("\"exp\""));
}

TEST_CASE("polynomial JSON round trip") {
  std::mt19937 rng(2024);
  for (int rank : {1, 2, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      const DiffPoly p = random_poly(rng, rank, 6, 4, 3, true);
      CHECK(diffpoly_from_json(to_json(p)) == p);
    }
  }
  CHECK(diffpoly_from_json(to_json(DiffPoly::zero(3))) == DiffPoly::zero(3));
}

TEST_CASE("operator and matrix JSON shapes") {
  const DiffOp l = factorized_product(AlgebraSpec::parse("A1"));
  const nlohmann::json op = nlohmann::json::parse(to_json(l));
  REQUIRE(op.contains("degree_coeffs"));
  CHECK(op["degree_coeffs"].contains("2"));
  CHECK(op["degree_coeffs"].contains("0"));
  CHECK(op["degree_coeffs"]["2"]["terms"][0]["coeff"] == "1");

  const RatMatrix m = {{rat(1, 2), Rat(0)}, {Rat(-3), Rat(7)}};
  const nlohmann::json mj = nlohmann::json::parse(to_json(m));
  CHECK(mj == nlohmann::json::array({{"1/2", "0"}, {"-3", "7"}}));

  PolyMatrix pm(2, 1);
  pm.at(0, 1) = DiffPoly::jet(1, 0, 1);
  const nlohmann::json pj = nlohmann::json::parse(to_json(pm));
  REQUIRE(pj.is_array());
  CHECK(pj[0][0]["terms"].empty());
  CHECK(pj[0][1]["terms"].size() == 1);
}

TEST_CASE("integral set JSON round trip") {
  const IntegralSet set = g2_quick();
  const std::string text = to_json(set);
  CHECK(text.find("\"algebra\"") < text.find("\"method\""));
  CHECK(text.find("\"method\"") < text.find("\"slice\""));
  CHECK(text.find("\"slice\"") < text.find("\"integrals\""));
  CHECK(text.find("\"integrals\"") < text.find("\"residuals\""));

  const IntegralSet back = integral_set_from_json(text);
  CHECK(back.spec == set.spec);
  CHECK(back.method == "quick");
  REQUIRE(back.integrals.size() == set.integrals.size());
  REQUIRE(back.residuals.size() == set.residuals.size());
  for (size_t i = 0; i < set.integrals.size(); ++i) {
    CHECK(back.integrals[i].label == set.integrals[i].label);
    CHECK(back.integrals[i].degree == set.integrals[i].degree);
    CHECK(back.integrals[i].poly == set.integrals[i].poly);
  }
  for (size_t i = 0; i < set.residuals.size(); ++i)
    CHECK(back.residuals[i].poly == set.residuals[i].poly);
}

TEST_CASE("gauge result JSON is a readable superset of an integral set") {
  const GaugeResult result =
      reduce_to_slice(AlgebraSpec::parse("A2"), SliceStyle::canonical);
  const std::string text = to_json(result);

  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j.at("algebra") == "A2");
  CHECK(j.at("method") == "ds");
  CHECK(j.at("slice") == "canonical");
  REQUIRE(j.contains("slice_basis"));
  CHECK(j["slice_basis"].size() == 2);
  CHECK(j["slice_basis"][0].contains("grade"));
  CHECK(j["slice_basis"][0].contains("label"));
  CHECK(j["slice_basis"][0].contains("matrix"));
  CHECK(j.contains("g"));
  CHECK(j.contains("transcript"));
  CHECK(j["transcript"].size() == 2);
  CHECK(j["transcript"][0].contains("grade"));
  CHECK(j["transcript"][0].contains("z"));
  CHECK(j.contains("final_connection"));

  const IntegralSet back = integral_set_from_json(text);
  CHECK(back.spec == result.integrals.spec);
  REQUIRE(back.integrals.size() == 2);
  CHECK(back.integrals[0].poly == result.integrals.integrals[0].poly);
  CHECK(back.integrals[1].poly == result.integrals.integrals[1].poly);
}

TEST_CASE("check report JSON") {
  CheckReport report;
  report.ok = false;
  report.residual_terms = 4;
  report.first_failing_monomials = {"I_1: u1"};
  const nlohmann::json j = nlohmann::json::parse(to_json(report));
  CHECK(j.at("ok") == false);
  CHECK(j.at("residual_terms") == 4);
  CHECK(j.at("first_failing_monomials") ==
        nlohmann::json::array({"I_1: u1"}));
}

TEST_CASE("duplicate jet entries accumulate on input") {
  const std::string text = R"({"rank":1,"terms":[
    {"coeff":"1","jets":[[1,1,1],[1,1,2]],"exp":[0]}]})";
  CHECK(diffpoly_from_json(text) == DiffPoly::jet(1, 0, 1, 3));
}

TEST_CASE("the exp key is optional and defaults to exponential-free") {
  const std::string text = R"({"rank":2,"terms":[
    {"coeff":"3","jets":[[2,1,1]]}]})";
  CHECK(diffpoly_from_json(text) == Rat(3) * DiffPoly::jet(2, 1, 1));
}

TEST_CASE("malformed polynomial JSON is rejected") {
  CHECK_THROWS_AS(diffpoly_from_json("{"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(diffpoly_from_json("[1,2]"),
                       "polynomial JSON must be an object",
                       std::invalid_argument);
  // Unparseable text reports the JSON error.
  try {
    diffpoly_from_json("not json");
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("malformed JSON") == 0);
  }

  auto rejects = [](const char* text) {
    CHECK_THROWS_AS(diffpoly_from_json(text), std::invalid_argument);
  };
  rejects(R"({"terms":[]})");                                      // no rank
  rejects(R"({"rank":1,"terms":[{"coeff":"1","jets":[[2,1,1]],"exp":[0]}]})");
  rejects(R"({"rank":1,"terms":[{"coeff":"1","jets":[[0,1,1]],"exp":[0]}]})");
  rejects(R"({"rank":1,"terms":[{"coeff":"1","jets":[[1,0,1]],"exp":[0]}]})");
  rejects(R"({"rank":1,"terms":[{"coeff":"1","jets":[[1,1,0]],"exp":[0]}]})");
  rejects(R"({"rank":1,"terms":[{"coeff":"1","jets":[[1,1]],"exp":[0]}]})");
  rejects(R"({"rank":1,"terms":[{"coeff":"1","jets":[],"exp":[0,0]}]})");
  rejects(R"({"rank":1,"terms":[{"coeff":"1","jets":[],"exp":[-1]}]})");
  rejects(R"({"rank":1,"terms":[{"coeff":"x","jets":[],"exp":[0]}]})");
}

TEST_CASE("malformed integral set JSON is rejected") {
  CHECK_THROWS_AS(integral_set_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(integral_set_from_json(R"({"integrals":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(integral_set_from_json(R"({"algebra":"A1"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(integral_set_from_json(R"({"algebra":"Q7","integrals":[]})"),
                  std::invalid_argument);
  // Rank of a polynomial must match the algebra.
  CHECK_THROWS_AS(integral_set_from_json(R"({"algebra":"A1","integrals":[
    {"label":"I_1","degree":2,"poly":{"rank":2,"terms":[]}}]})"),
                  std::invalid_argument);
}

TEST_CASE("serialization is deterministic within a process") {
  const IntegralSet set = g2_quick();
  CHECK(to_json(set) == to_json(set));
  CHECK(to_text(set) == to_text(set));
  const GaugeResult result =
      reduce_to_slice(AlgebraSpec::parse("D4"), SliceStyle::reference_d4);
  CHECK(to_json(result) == to_json(result));
}
