#include <catch2/catch_amalgamated.hpp>

#include "bp/spec_io.hpp"

using bp::json;
using bp::Rational;

namespace {

json bridge_exchangeable_spec() {
    return json{{"structure", {{"formula", bp::kBridgeFormula}, {"n", 5}}},
                {"model", {{"model", "exchangeable"}}}};
}

}  // namespace

TEST_CASE("parse each model kind") {
    const auto ex = bp::parse_system_spec(bridge_exchangeable_spec());
    CHECK(std::holds_alternative<bp::Exchangeable>(ex.model));
    CHECK(ex.structure.n() == 5);
    CHECK(ex.options.method == bp::Method::Auto);
    CHECK(ex.options.tol == 1e-10);
    CHECK(ex.options.samples == 100000);
    CHECK(ex.options.seed == 0);

    const json weibull{{"structure", {{"formula", "x1*x2"}, {"n", 2}}},
                       {"model", {{"model", "weibull"}, {"lambda", {1.0, 2.0}}, {"alpha", 1.5}}},
                       {"options", {{"method", "quadrature"}, {"tol", 1e-8}}}};
    const auto w = bp::parse_system_spec(weibull);
    CHECK(std::get<bp::IndependentWeibull>(w.model).alpha == 1.5);
    CHECK(w.options.method == bp::Method::Quadrature);
    CHECK(w.options.tol == 1e-8);

    const json order{{"structure", {{"formula", "x1*x2*x3"}, {"n", 3}}},
                     {"model",
                      {{"model", "order_distribution"},
                       {"probs", {{"132", "1/3"}, {"213", "1/3"}, {"321", "1/3"}}}}}};
    const auto o = bp::parse_system_spec(order);
    const auto& dist = std::get<bp::OrderDistribution>(o.model);
    CHECK(dist.exact);
    CHECK(dist.probs.at({1, 3, 2}) == Rational(1, 3));

    const json indep{
        {"structure", {{"truth_table_hex", "08"}, {"n", 2}}},
        {"model",
         {{"model", "independent"},
          {"marginals",
           json::array({json{{"dist", "exponential"}, {"rate", 1.0}},
                        json{{"dist", "weibull"}, {"lambda", 2.0}, {"alpha", 0.8}}})}}}};
    const auto ind = bp::parse_system_spec(indep);
    CHECK(std::get<bp::IndependentMarginals>(ind.model).marginals.size() == 2);
}

TEST_CASE("spec errors name the offending field") {
    auto expect_error = [](json j, const std::string& needle) {
        try {
            bp::parse_system_spec(j);
            FAIL("expected SpecError for " + needle);
        } catch (const bp::SpecError& e) {
            CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring(needle));
        }
    };

    expect_error(json{{"model", {{"model", "exchangeable"}}}}, "structure");
    expect_error(json{{"structure", {{"formula", "x1"}}}, {"model", {{"model", "exchangeable"}}}},
                 "structure.n");
    expect_error(json{{"structure", {{"formula", "x1"}, {"truth_table_hex", "02"}, {"n", 1}}},
                      {"model", {{"model", "exchangeable"}}}},
                 "structure");
    expect_error(json{{"structure", {{"formula", "x1*x2"}, {"n", 2}}}}, "model");
    expect_error(json{{"structure", {{"formula", "x1*x2"}, {"n", 2}}},
                      {"model", {{"model", "nope"}}}},
                 "model.model");
    expect_error(json{{"structure", {{"formula", "x1*x2"}, {"n", 2}}},
                      {"model", {{"model", "weibull"}, {"lambda", {1.0}}, {"alpha", 1.0}}}},
                 "model.lambda");
    expect_error(json{{"structure", {{"formula", "x1*x2"}, {"n", 2}}},
                      {"model", {{"model", "weibull"}, {"lambda", {1.0, -2.0}}, {"alpha", 1.0}}}},
                 "model.lambda");
    expect_error(json{{"structure", {{"formula", "x1*x2"}, {"n", 2}}},
                      {"model", {{"model", "exchangeable"}}},
                      {"options", {{"method", "fastest"}}}},
                 "options.method");
    expect_error(json{{"structure", {{"formula", "x1*x2"}, {"n", 2}}},
                      {"model",
                       {{"model", "order_distribution"}, {"probs", {{"12", "1/2"}}}}}},
                 "model.probs");
    expect_error(
        json{{"structure", {{"formula", "x1*x2"}, {"n", 2}}},
             {"model",
              {{"model", "independent"},
               {"marginals", json::array({json{{"dist", "normal"}, {"rate", 1.0}},
                                          json{{"dist", "exponential"}, {"rate", 1.0}}})}}}},
        "marginals");
}

TEST_CASE("spec round trips through serialization") {
    const json original{{"structure", {{"formula", "x1*x2 | x1*x3"}, {"n", 3}}},
                        {"model", {{"model", "weibull"}, {"lambda", {1.0, 2.0, 3.0}}, {"alpha", 2.0}}},
                        {"options", {{"method", "closed_form"}, {"seed", 9}}}};
    const auto spec = bp::parse_system_spec(original);
    const json serialized = bp::system_spec_to_json(spec);
    const auto reparsed = bp::parse_system_spec(serialized);
    CHECK(bp::system_spec_to_json(reparsed) == serialized);
    CHECK(reparsed.structure.table() == spec.structure.table());
    CHECK(serialized.at("options").at("seed") == 9);
    CHECK(serialized.at("options").at("method") == "closed_form");
}

TEST_CASE("analyze report: bridge + exchangeable") {
    const auto spec = bp::parse_system_spec(bridge_exchangeable_spec());
    const json report = bp::analyze_report(spec);
    CHECK(report.at("bp")[2] == "1/15");
    CHECK(report.at("bp")[0] == "7/30");
    CHECK(report.at("exact") == true);
    CHECK(report.at("method") == "exact");
    CHECK(report.at("s") == json::array({"0", "1/5", "3/5", "1/5", "0"}));
    CHECK(report.at("tail") == json::array({"1", "1", "4/5", "1/5", "0", "0"}));
    CHECK_THAT(report.at("symmetry_bp").get<double>(),
               Catch::Matchers::WithinAbs(0.956113, 1e-6));
}

TEST_CASE("analyze report: series-3 + exchangeable") {
    const json j{{"structure", {{"formula", "x1*x2*x3"}, {"n", 3}}},
                 {"model", {{"model", "exchangeable"}}}};
    const json report = bp::analyze_report(bp::parse_system_spec(j));
    CHECK(report.at("bp") == json::array({"1/3", "1/3", "1/3"}));
    CHECK(report.at("s") == json::array({"1", "0", "0"}));
    CHECK(report.at("b") == json::array({"1/3", "1/3", "1/3"}));
}

TEST_CASE("analyze report: float path uses numbers") {
    const json j{{"structure", {{"formula", "x1*x2"}, {"n", 2}}},
                 {"model", {{"model", "weibull"}, {"lambda", {1.0, 2.0}}, {"alpha", 1.0}}}};
    const json report = bp::analyze_report(bp::parse_system_spec(j));
    CHECK(report.at("exact") == false);
    CHECK(report.at("method") == "closed_form");
    CHECK(report.at("bp")[0].is_number());
    CHECK_THAT(report.at("bp")[0].get<double>(),
               Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-9));
    // Structural vectors stay exact rationals.
    CHECK(report.at("b") == json::array({"1/2", "1/2"}));
}

TEST_CASE("reports are byte-deterministic") {
    const auto spec = bp::parse_system_spec(bridge_exchangeable_spec());
    CHECK(bp::analyze_report(spec).dump(2) == bp::analyze_report(spec).dump(2));

    const json wj{{"structure", {{"formula", bp::kBridgeFormula}, {"n", 5}}},
                  {"model",
                   {{"model", "weibull"}, {"lambda", {1.0, 2.0, 0.5, 1.5, 3.0}}, {"alpha", 1.1}}},
                  {"options", {{"samples", 20000}, {"seed", 4}}}};
    const auto wspec = bp::parse_system_spec(wj);
    CHECK(bp::verify_to_json(bp::verify(wspec)).dump(2) ==
          bp::verify_to_json(bp::verify(wspec)).dump(2));
}

TEST_CASE("verify: bridge + exchangeable passes") {
    json j = bridge_exchangeable_spec();
    j["options"] = json{{"samples", 100000}, {"seed", 7}};
    const auto rep = bp::verify(bp::parse_system_spec(j));
    CHECK(rep.all_pass);
    CHECK_FALSE(rep.lines.empty());
    // Exact oracle rows have zero tolerance.
    CHECK(rep.lines.front().tolerance == 0.0);
}

TEST_CASE("verify: independent marginals use quadrature plus Monte Carlo") {
    const json j{{"structure", {{"formula", "x1*x2 | x3"}, {"n", 3}}},
                 {"model",
                  {{"model", "independent"},
                   {"marginals",
                    json::array({json{{"dist", "exponential"}, {"rate", 1.0}},
                                 json{{"dist", "weibull"}, {"lambda", 2.0}, {"alpha", 1.5}},
                                 json{{"dist", "exponential"}, {"rate", 0.5}}})}}},
                 {"options", {{"samples", 20000}, {"seed", 2}}}};
    const auto rep = bp::verify(bp::parse_system_spec(j));
    CHECK(rep.all_pass);
}

TEST_CASE("verify: weibull three-way agreement passes") {
    const json j{{"structure", {{"formula", "x1*x2 | x2*x3 | x1*x3"}, {"n", 3}}},
                 {"model", {{"model", "weibull"}, {"lambda", {1.0, 2.0, 3.0}}, {"alpha", 2.0}}},
                 {"options", {{"samples", 30000}, {"seed", 3}}}};
    const auto rep = bp::verify(bp::parse_system_spec(j));
    CHECK(rep.all_pass);
    bool saw_quadrature_row = false;
    for (const auto& line : rep.lines)
        if (line.quantity.find("quadrature") != std::string::npos) saw_quadrature_row = true;
    CHECK(saw_quadrature_row);
}

TEST_CASE("symmetry report") {
    const json kofn{{"structure", {{"truth_table_hex",
                                    bp::make_k_out_of_n(4, 2).truth_table_hex()},
                                   {"n", 4}}},
                    {"model", {{"model", "exchangeable"}}}};
    const json rep = bp::symmetry_report(bp::parse_system_spec(kofn));
    CHECK(rep.at("symmetry_bp").get<double>() == 1.0);
    CHECK(bp::render_symmetry(rep).find("H(I_BP) = 1.000000") != std::string::npos);

    const json unit{{"structure", {{"formula", "x1"}, {"n", 3}}},
                    {"model", {{"model", "exchangeable"}}}};
    const json urep = bp::symmetry_report(bp::parse_system_spec(unit));
    CHECK(urep.at("symmetry_bp").get<double>() == 0.0);

    const json single{{"structure", {{"formula", "x1"}, {"n", 1}}},
                      {"model", {{"model", "exchangeable"}}}};
    CHECK_THROWS_AS(bp::symmetry_report(bp::parse_system_spec(single)), bp::NotADistribution);
}

TEST_CASE("non-exact order distribution demotes to float") {
    // Decimal probabilities: sums to 1 only within double rounding.
    const json j{{"structure", {{"formula", "x1*x2*x3"}, {"n", 3}}},
                 {"model",
                  {{"model", "order_distribution"},
                   {"probs",
                    {{"123", 0.16666666666666666}, {"132", 0.16666666666666666},
                     {"213", 0.16666666666666666}, {"231", 0.16666666666666666},
                     {"312", 0.16666666666666666}, {"321", 0.16666666666666669}}}}}};
    const auto spec = bp::parse_system_spec(j);
    const auto& dist = std::get<bp::OrderDistribution>(spec.model);
    CHECK(dist.probs.size() == 6);
    CHECK_FALSE(dist.exact);
    CHECK_FALSE(bp::model_has_exact_path(spec.model));
}
