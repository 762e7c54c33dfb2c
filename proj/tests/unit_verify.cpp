#include <doctest.h>

#include <fstream>
#include <sstream>

#include "polyaut/serialize.hpp"
#include "polyaut/verify.hpp"

using namespace polyaut;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const std::string kGoldenDir = POLYAUT_GOLDEN_DIR;

}  // namespace

TEST_CASE("foundations all pass") {
    auto reps = verify_foundations();
    CHECK(reps.size() == 13);
    for (const auto& r : reps) {
        INFO(r.id, " expected ", r.expected, " computed ", r.computed);
        CHECK(r.status == "pass");
    }
}

TEST_CASE("case driver round trip") {
    auto reps = verify_lemma("L2.A", NumericMode{1, 2});
    REQUIRE(reps.size() == 2);
    for (const auto& r : reps) {
        INFO(r.id, " expected ", r.expected, " computed ", r.computed);
        CHECK(r.status == "pass");
    }
    CHECK(reps[0].witness == "(8,6,15;11,8,20)");
    CHECK(verify_lemma("L6.ii").size() == 4);
    CHECK_THROWS_AS(verify_lemma("L9"), UnknownCase);
}

TEST_CASE("word and centralizer drivers") {
    CHECK(verify_theorem_s1(5).status == "pass");
    for (const auto& r : verify_centralizer()) CHECK(r.status == "pass");
}

TEST_CASE("image certificates agree with expansion") {
    std::mt19937_64 rng(51);
    auto cs = case_spec("L2.A");
    auto asg = sample_case(cs, rng);
    auto a = instantiate(cs, asg);
    auto lift = case_lift(a, cs.lift);
    auto psi = compose(phi_prime<Rational>(asg.at(Sym::u)), lift);
    for (uint64_t s = 0; s < 5; ++s) {
        auto p = random_class_element({1, 1}, s, 4);
        auto cert = certify_image(psi, p);
        REQUIRE(cert.has_value());
        auto img = psi.apply(p);
        auto lt = img.leading_term();
        CHECK(lt.exp == cert->lt_exp);
        CHECK(lt.coeff == cert->lt_coeff);
        CHECK(img.weighted_degree(kW1) <= cert->w1);
        CHECK(img.weighted_degree(kW2) <= cert->w2);
    }
}

TEST_CASE("emission is canonical and deterministic") {
    auto once = named_objects(), twice = named_objects();
    for (const auto& [name, obj] : once) {
        CHECK(obj.text == twice.at(name).text);
        CHECK(obj.structured.dump() == twice.at(name).structured.dump());
    }
    CHECK(once.at("f").text == "x1*x3 - x2^2\n");
    Report r{"demo", "fail", "a", "b", "", "", 7, true, 3};
    CHECK(report_line(r) == "[fail] demo  expected: a  computed: b");
    auto j = report_json(r);
    CHECK(j["seed"] == 7);
    CHECK(!j.contains("millis"));
    CHECK(report_json(r, true)["millis"] == 3);
}

TEST_CASE("explicit expansion matches the pinned files") {
    auto objects = named_objects();
    CHECK(objects.at("exp.x1").text == slurp(kGoldenDir + "/eq6_x1.txt"));
    CHECK(objects.at("exp.x2").text == slurp(kGoldenDir + "/eq6_x2.txt"));
    CHECK(objects.at("exp.x3").text == slurp(kGoldenDir + "/eq6_x3.txt"));
    CHECK(objects.at("exp.tr").text == slurp(kGoldenDir + "/eq6_tr.txt"));
}

TEST_CASE("pinned leading terms for the light branches") {
    auto golden = slurp(kGoldenDir + "/leading_terms.txt");
    for (const char* id : {"L4.ii", "L5.iii", "L6.viii"}) {
        auto cs = case_spec(id);
        auto ci = case_images(cs.alpha, cs.lift, verifydetail::usym(), cs.type);
        auto line = [&](const char* name, int var, const ClassIndex& c) {
            auto lt = ci.psi.image(var).leading_term();
            std::string s = std::string(id) + " " + name + " " + class_str(c) + " " +
                            Polynomial<ParamFraction>::monomial(Ring::six, lt.exp, lt.coeff).str() +
                            "\n";
            INFO(s);
            CHECK(golden.find(s) != std::string::npos);
        };
        line("R", TR, cs.cls_r);
        line("F", TF, cs.cls_f);
        line("G", TG, cs.cls_g);
    }
}
