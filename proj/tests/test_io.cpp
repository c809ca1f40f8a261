#include <doctest.h>

#include <orbitcalc/errors.hpp>
#include <orbitcalc/io.hpp>

#include "support/generators.hpp"

using namespace orbitcalc;

namespace
{

std::string data(const char *name)
{
    return read_text_file(std::string(ORBITCALC_TEST_DATA) + "/" + name);
}

} // namespace

TEST_CASE("series files")
{
    const LinearSeries s = parse_series_json(data("two_squares.json"));
    CHECK(s.r() == 1);
    CHECK(s.d() == 2);
    CHECK(to_string(wronskian(s)) == "v1*v2");
    CHECK(parse_series_json(series_to_json(s)).basis() == s.basis());

    const LinearSeries q = parse_series_json(R"({"r":0,"d":2,"basis":[["1/2","-3",4]]})");
    CHECK(q.basis()[0].coeffs()[0] == Rational(1, 2));
    CHECK(q.basis()[0].coeffs()[2] == 4);

    CHECK_THROWS_AS(parse_series_json(data("dependent.json")), DegenerateBasis);
    CHECK_THROWS_AS(parse_series_json("{"), ParseError);
    CHECK_THROWS_AS(parse_series_json(R"({"r":1,"d":2})"), ParseError);
    CHECK_THROWS_AS(parse_series_json(R"({"r":1,"d":2,"basis":[["1","0","0"]]})"), ParseError);
    CHECK_THROWS_AS(parse_series_json(R"({"r":0,"d":2,"basis":[["1","0"]]})"), ParseError);
    CHECK_THROWS_AS(parse_series_json(R"({"r":0,"d":1,"basis":[["1/0","1"]]})"), ParseError);
    CHECK_THROWS_AS(parse_series_json(R"({"r":0,"d":1,"basis":[[0.5,"1"]]})"), ParseError);
    CHECK_THROWS_AS(read_text_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("profile files")
{
    const RamificationProfile p = parse_profile_json(data("flex_profile.json"));
    CHECK(to_string(p) == "(0,4),(0,2)x3");
    CHECK(parse_profile_json(profile_to_json(p)) == p);
    CHECK_THROWS_AS(parse_profile_json(R"({"r":1,"d":4,"points":[[0,1]]})"), InvalidSequence);
    CHECK_THROWS_AS(parse_profile_json(R"({"r":1,"d":4,"points":[[2,1]]})"), InvalidSequence);
    CHECK_THROWS_AS(parse_profile_json(R"({"r":1,"d":4,"points":[["a"]]})"), ParseError);
}

TEST_CASE("inline profile grammar")
{
    CHECK(parse_profile_points("(0,2)x6").size() == 6);
    CHECK(parse_profile_points(" (0,3) , (0,2)x4 ").size() == 5);
    CHECK(parse_profile_points("").empty());
    CHECK_THROWS_AS(parse_profile_points("(0,2)x0"), ParseError);
    CHECK_THROWS_AS(parse_profile_points("(0,2"), ParseError);
    CHECK_THROWS_AS(parse_profile_points("0,2"), ParseError);
    CHECK_THROWS_AS(parse_profile_points("(0,2)y3"), ParseError);
}

TEST_CASE("tree files")
{
    const LabelledTree t = parse_tree_json(data("three_leaf_tree.json"));
    CHECK(t.vertices.size() == 4);
    CHECK(t.edges[0].label_v == VanishingSequence({1, 4}));
    CHECK(t.edges[2].label_v == VanishingSequence({2, 3}));
    CHECK(validate_tree(t).ok());
    const LabelledTree back = parse_tree_json(tree_to_json(t));
    CHECK(tree_to_json(back) == tree_to_json(t));

    const LabelledTree bad = parse_tree_json(data("bad_tree.json"));
    CHECK(validate_tree(bad).has(TreeReport::Failure::complementarity));
    CHECK_THROWS_AS(parse_tree_json(R"({"r":1,"d":4,"vertices":[1],"edges":[]})"), ParseError);
}

TEST_CASE("schubert class serialization")
{
    SchubertClass c(1, 4);
    c.add({3}, 24);
    c.add({2, 1}, 48);
    CHECK(schubert_to_json(c) == R"([{"coef":48,"partition":[2,1]},{"coef":24,"partition":[3]}])");
    CHECK(parse_schubert_json(1, 4, schubert_to_json(c)) == c);
    CHECK(schubert_to_json(SchubertClass(1, 4)) == "[]");
    CHECK_THROWS_AS(parse_schubert_json(1, 4, R"([{"partition":[4],"coef":1}])"), InvalidSequence);
    CHECK_THROWS_AS(parse_schubert_json(1, 4, R"([{"partition":[1],"coef":"1/2"}])"), ParseError);
}

TEST_CASE("certificates")
{
    const Relation rel = decompose(gen::three_leaf_tree());
    const std::string text = certificate_json(rel, verify(rel));
    CHECK(text.find("\"verified\": true") != std::string::npos);
    CHECK(text.find("\"difference\": \"0\"") != std::string::npos);
}
