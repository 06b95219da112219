#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wz/errors.hpp"
#include "wz/geom.hpp"
#include "wz/manifest.hpp"

using namespace wz;

TEST_CASE("the worked example parses") {
    Manifest m = parse_manifest(
        "[field]\np=3\na=1\n[variety main]\nkind=projective\nvars=x,y,z\n"
        "eq=y^2*z - x^3 - x*z^2 - z^3\n");
    CHECK(m.field.p() == 3);
    CHECK(m.field.a() == 1);
    const VarietySpec& v = m.variety("main");
    CHECK(v.kind == VarietySpec::Kind::Projective);
    CHECK(v.coord_count == 3);
    REQUIRE(v.equations.size() == 1);
    // coefficients reduced mod 3: -1 becomes 2
    CHECK(count_points(v, 1) > BigInt(0));
    CHECK(m.default_variety == "main");
}

TEST_CASE("unbound variables and non-homogeneous equations are rejected") {
    CHECK_THROWS_AS(
        parse_manifest("[field]\np=3\na=1\n[variety v]\nkind=affine\n"
                       "vars=x,y\neq=x + w\n"),
        UnboundVariable);
    CHECK_THROWS_AS(
        parse_manifest("[field]\np=3\na=1\n[variety v]\nkind=projective\n"
                       "vars=x,y\neq=x^2 + y\n"),
        NonHomogeneous);
    // g needs an extension field
    CHECK_THROWS_AS(
        parse_manifest("[field]\np=3\na=1\n[variety v]\nkind=affine\n"
                       "vars=x\neq=g*x\n"),
        UnboundVariable);
    // and is fine over F_9
    Manifest m = parse_manifest(
        "[field]\np=3\na=2\n[variety v]\nkind=affine\nvars=x\neq=g*x\n");
    CHECK(m.variety("v").equations.size() == 1);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_manifest("[field]\np=3\na=1\n[variety v]\nkind=affine\n"
                       "vars=x\neq=x + + \n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 7);
        CHECK(e.col > 0);
    }
    CHECK_THROWS_AS(parse_manifest("p=3\n"), ParseError);
    CHECK_THROWS_AS(parse_manifest("[field]\np=3\n"), ParseError);  // missing a
    CHECK_THROWS_AS(
        parse_manifest("[field]\np=3\na=1\n[variety v]\nkind=warped\n"),
        ParseError);
}

TEST_CASE("products, unions, translates and actions resolve") {
    std::string text =
        "[field]\np = 2\na = 1\n"
        "[variety e1]\nkind = projective\nvars = x,y,z\n"
        "eq = y^2*z + x*y*z + x^3 + z^3\n"
        "[variety prod]\nkind = product\nfactors = e1,e1\n"
        "[variety th]\nkind = translate\nambient = prod\nslot = 0\n"
        "fix_1 = 0,1,0\n"
        "[variety u]\nkind = union\ncomponents = th,th2\n"
        "[variety th2]\nkind = translate\nambient = prod\nslot = 1\n"
        "fix_0 = 0,1,0\n"
        "[action a]\non = prod\norder = 2\n"
        "map_0 = x, x+y, z\nmap_1 = x, x+y, z\n"
        "[declare]\nmain = u\n";
    Manifest m = parse_manifest(text);
    const VarietySpec& u = m.variety("u");
    CHECK(u.kind == VarietySpec::Kind::Union);
    // wedge count: 2 N(E) - 1
    BigInt ne = count_points(m.variety("e1"), 1);
    CHECK(count_points(u, 1) == BigInt(2) * ne - BigInt(1));
    CHECK(m.default_variety == "u");
    const GroupAction& a = m.action("a");
    CHECK(a.order == 2);
    CHECK(a.slot_maps.size() == 2);

    // cyclic references are flagged
    CHECK_THROWS_AS(
        parse_manifest("[field]\np=2\na=1\n"
                       "[variety a]\nkind=union\ncomponents=b\n"
                       "[variety b]\nkind=union\ncomponents=a\n"),
        ParseError);
}

TEST_CASE("comments, blank lines, spaces around =") {
    Manifest m = parse_manifest(
        "# heading comment\n\n[field]\n  p   =  5\t\na=1  # trailing\n\n"
        "[variety main]\nkind = affine\nvars = x\neq = x^2 - 1\n");
    CHECK(m.field.p() == 5);
    CHECK(count_points(m.variety("main"), 1) == BigInt(2));
}

TEST_CASE("fixed points must lie on their factors") {
    CHECK_THROWS_AS(
        parse_manifest("[field]\np=2\na=1\n"
                       "[variety e1]\nkind=projective\nvars=x,y,z\n"
                       "eq=y^2*z + x*y*z + x^3 + z^3\n"
                       "[variety prod]\nkind=product\nfactors=e1,e1\n"
                       "[variety th]\nkind=translate\nambient=prod\nslot=0\n"
                       "fix_1 = 1,0,0\n"),
        HypothesisViolated);
}
