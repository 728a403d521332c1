#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "cdkit/generators.hpp"
#include "cdkit/report.hpp"
#include "cdkit/verify.hpp"
#include "suite.hpp"

using namespace cdkit;

namespace {

VerificationReport run(const SimplicialComplex& L, const std::string& suites)
{
    bool is_all = false;
    const auto parsed = parse_suites(suites, is_all);
    SphereCache cache;
    return verify(L, "test", parsed, is_all, cache);
}

ErrorCode code_of(const SimplicialComplex& L, const std::string& suites)
{
    try {
        run(L, suites);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::parse_error;
}

const IdentityResult* find(const VerificationReport& r, const std::string& name)
{
    for (const auto& res : r.results) {
        if (res.identity == name) {
            return &res;
        }
    }
    return nullptr;
}

}  // namespace

TEST_CASE("parse_suites", "[verify]")
{
    bool is_all = false;
    CHECK(parse_suites("ds,theorem", is_all) == std::vector<Suite>{Suite::dehn_sommerville, Suite::theorem});
    CHECK_FALSE(is_all);
    CHECK(parse_suites("all", is_all).size() == 5);
    CHECK(is_all);
    CHECK_THROWS_AS(parse_suites("ds,bogus", is_all), Error);
    CHECK_THROWS_AS(parse_suites("", is_all), Error);
}

TEST_CASE("verify all on the icosahedron", "[verify]")
{
    const auto r = run(icosahedron(), "all");
    CHECK(r.all_pass());
    CHECK_FALSE(r.has_finding());
    CHECK(r.skipped.empty());
    const auto* theorem = find(r, "theorem");
    REQUIRE(theorem);
    CHECK(theorem->outcome == Outcome::pass);
    CHECK(theorem->witnesses[0].value == 6);
    CHECK(theorem->witnesses[1].value == 6);
    const auto* sign = find(r, "theorem-sign");
    REQUIRE(sign);
    CHECK(sign->outcome == Outcome::pass);
    for (const char* name : {"dehn-sommerville", "gamma", "link-derivative", "join-multiplicativity"}) {
        INFO(name);
        REQUIRE(find(r, name));
        CHECK(find(r, name)->outcome == Outcome::pass);
    }
}

TEST_CASE("verify all on odd-dimensional flag spheres", "[verify]")
{
    const auto r = run(cycle(7), "all");
    CHECK(r.all_pass());
    REQUIRE(r.skipped.size() == 1);
    CHECK(r.skipped[0].rfind("theorem", 0) == 0);
    const auto* sign = find(r, "charney-davis-sign");
    REQUIRE(sign);
    CHECK(sign->witnesses[0].value == 3);
    CHECK(find(r, "theorem") == nullptr);
}

TEST_CASE("inapplicable suites", "[verify]")
{
    const auto solid = cdkit::testing::solid_triangle();
    CHECK(code_of(solid, "ds") == ErrorCode::not_a_sphere);
    CHECK(code_of(solid, "gamma") == ErrorCode::not_a_sphere);
    CHECK(code_of(solid, "theorem") == ErrorCode::not_a_sphere);
    CHECK(code_of(cycle(5), "theorem") == ErrorCode::wrong_parity);
    // links and joins apply to every complex
    const auto r = run(solid, "links,joins");
    CHECK(r.all_pass());
    CHECK(r.results.size() == 2);

    const auto all = run(cdkit::testing::projective_plane(), "all");
    CHECK(all.all_pass());
    CHECK(all.skipped.size() == 3);
}

TEST_CASE("repeated suites are run once", "[verify]")
{
    CHECK(run(icosahedron(), "links,links,links").results.size() == 1);
}

TEST_CASE("verification report rendering", "[verify]")
{
    const auto r = run(cycle(5), "all");
    const auto j = to_json(r);
    CHECK(j["complex"] == "test");
    CHECK(j["pass"] == true);
    CHECK(j["skipped"].size() == 1);
    bool saw_cd = false;
    for (const auto& res : j["results"]) {
        if (res["identity"] == "charney-davis-sign") {
            saw_cd = true;
            CHECK(res["witnesses"]["(-1)^d h(-1)"] == "1/1");
        }
        CHECK(res["outcome"] == "pass");
    }
    CHECK(saw_cd);
    const auto text = render_text(r);
    CHECK(text.find("result: pass") != std::string::npos);
    CHECK(text.find("[skipped] theorem") != std::string::npos);
}

TEST_CASE("all suites pass across the sphere suite", "[verify][property]")
{
    for (const auto& [name, L] : cdkit::testing::sphere_suite()) {
        INFO(name);
        const auto r = run(L, "all");
        CHECK(r.all_pass());
        CHECK_FALSE(r.has_finding());
    }
}
