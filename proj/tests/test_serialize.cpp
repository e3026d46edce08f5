#include <doctest.h>

#include "cyclab/error.hpp"
#include "cyclab/experiments.hpp"
#include "cyclab/inequalities.hpp"
#include "cyclab/serialize.hpp"
#include "helpers.hpp"

using namespace cyclab;

TEST_SUITE("serialization") {

TEST_CASE("complex numbers are [re, im] pairs") {
    CHECK(to_json(Complex(1.5, -2.0)).dump() == "[1.5,-2.0]");
    CHECK(complex_from_json(Json::parse("[3, 4]")) == Complex(3, 4));
    CHECK_THROWS_AS(complex_from_json(Json::parse("[3]")), ParseError);
    CHECK_THROWS_AS(complex_from_json(Json::parse("{\"re\": 1}")), ParseError);
}

TEST_CASE("parameters round-trip and reject bad shapes") {
    Engine rng = sample_engine(1, 1);
    const ExpPolyParams l = sample_params({3, 2, 2}, rng);
    const Json j = to_json(l);
    CHECK(j["c"].size() == 3);
    CHECK(j["c"][0].size() == 3);
    CHECK(j["d"][0].size() == 2);
    CHECK(params_from_json(j).coordinates() == l.coordinates());
    Json bad = j;
    bad["d"][1].erase(0);
    CHECK_THROWS_AS(params_from_json(bad), ParseError);
    bad = j;
    bad.erase("m");
    CHECK_THROWS_AS(params_from_json(bad), ParseError);
    bad = j;
    bad["q"] = 0;
    CHECK_THROWS_AS(params_from_json(bad), ParseError);
    CHECK_THROWS_AS(params_from_json(Json::parse("[1, 2]")), ParseError);
}

TEST_CASE("jets and tables round-trip") {
    const Jet a(std::vector<Complex>{1, Complex(0, 2), -3});
    CHECK(jet_from_json(to_json(a)).coeffs()[1] == Complex(0, 2));
    CHECK_THROWS_AS(jet_from_json(Json::array()), ParseError);

    const ExpPolyParams center({2, 0, 1}, {1, -1}, {1, 1});
    const WronskianTable t = wronskian_table(center);
    const Json jt = to_json(t);
    CHECK(jt["entries"]["3"] == -1);
    CHECK(jt["entries"]["1"] == 0);
    const WronskianTable back = table_from_json(jt);
    CHECK(back.entries == t.entries);
    Json bad = jt;
    bad["entries"]["9"] = 0;
    CHECK_THROWS_AS(table_from_json(bad), ParseError);
}

TEST_CASE("reports round-trip under their schemas") {
    const ExpPolyParams g = params_from_json(test::load_fixture("exp_z_minus_1_minus_z"));

    const ZeroCountReport z = count_zeros(g, Disk{0.0, 0.5});
    const Json jz = to_json(z);
    for (const char* key : {"disk", "count", "residual", "roots", "agreed"}) CHECK(jz.contains(key));
    CHECK(to_json(zero_report_from_json(jz)) == jz);

    const RolleReport r = rolle_check(g);
    const Json jr = to_json(r);
    CHECK(to_json(rolle_report_from_json(jr)) == jr);

    CartanConfig cc;
    const InequalityReport ci = cartan_verify(params_from_json(test::load_fixture("z_exp_z")), cc);
    const Json jc = to_json(ci);
    CHECK(jc.contains("witness"));
    CHECK_FALSE(jc.contains("empirical_exponent"));
    CHECK(to_json(inequality_report_from_json(jc)) == jc);

    InequalityReport inf;
    inf.empirical_exponent = INFINITY;
    const Json ji = to_json(inf);
    CHECK(ji["empirical_exponent"].is_null());
    CHECK(std::isinf(*inequality_report_from_json(ji).empirical_exponent));

    const std::vector<Jet> fs{family_jet(ExpPolyParams({1, 0, 1}, {1}, {1}))};
    const Json jf = to_json(frobenius_residual(fs, fs[0]));
    CHECK(to_json(frobenius_report_from_json(jf)) == jf);

    SweepConfig cfg = sweep_config_from_json(test::load_fixture("sweep_center_perturbation"));
    cfg.samples = 30;
    const Json jcfg = to_json(cfg);
    CHECK(to_json(sweep_config_from_json(jcfg)) == jcfg);
    const Json js = to_json(empirical_cyclicity(cfg));
    CHECK(to_json(sweep_report_from_json(js)) == js);
}

TEST_CASE("sweep config schema errors") {
    Json j = test::load_fixture("sweep_center_perturbation");
    j["epsilon"] = -1.0;
    CHECK_THROWS_AS(sweep_config_from_json(j), ParseError);
    j = test::load_fixture("sweep_center_perturbation");
    j["seed"] = -3;
    CHECK_THROWS_AS(sweep_config_from_json(j), ParseError);
    j = test::load_fixture("sweep_center_perturbation");
    j["base_point"]["m"] = 3;
    CHECK_THROWS_AS(sweep_config_from_json(j), ParseError);
}

TEST_CASE("hash strings") {
    CHECK(hash_string(0xabcULL) == "0000000000000abc");
    CHECK(sample_status_from_string("rejected_center") == SampleStatus::rejected_center);
    CHECK_THROWS_AS(sample_status_from_string("bogus"), ParseError);
}

}  // TEST_SUITE
