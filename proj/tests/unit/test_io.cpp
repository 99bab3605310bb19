#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../support/generators.hpp"
#include "altiset/errors.hpp"
#include "altiset/io.hpp"

using namespace altiset;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class F>
ParseError parse_error(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected ParseError");
    return ParseError("unreachable");
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("relation JSON") {
    const auto r = io::parse_relation_json(R"({"size": 3, "labels": ["a","b","c"], "pairs": [[0,1],[0,1],[2,2]]})");
    CHECK(r.pair_count() == 2);
    CHECK(r.universe().labels()[2] == "c");
    CHECK(io::parse_relation_json(io::emit_relation_json(r)) == r);

    CHECK(parse_error([] { io::parse_relation_json(R"({"size": 2, "pairs": [[0, 5]]})"); }).field() == "pairs");
    CHECK(parse_error([] { io::parse_relation_json(R"({"size": 2})"); }).field() == "pairs");
    CHECK(parse_error([] { io::parse_relation_json(R"({"size": -1, "pairs": []})"); }).field() == "size");
    CHECK(parse_error([] { io::parse_relation_json(R"({"size": 1, "pairs": [], "extra": 0})"); }).field() == "extra");
    CHECK(parse_error([] { io::parse_relation_json("{\n\"size\": 2,\n\"pairs\": [[0,1]\n"); }).line() == 4);
    CHECK(parse_error([] { io::parse_relation_json(R"({"size": 2, "labels": ["a","a"], "pairs": []})"); }).field() ==
          "labels");
}

TEST_CASE("system JSON") {
    const auto s = io::parse_system_json(
        R"({"size": 3, "orders": [{"keys": [1, "2.5", 1e2], "direction": "gain"}, {"keys": [3, 2, 1], "direction": "price"}]})");
    CHECK(s.orders()[0].keys[1] == Key::parse("2.5"));
    CHECK(s.orders()[0].keys[2] == Key(100));
    CHECK(s.orders()[1].direction == Direction::price);
    const auto text = io::emit_system_json(s);
    CHECK(io::emit_system_json(io::parse_system_json(text)) == text);

    CHECK(parse_error([] { io::parse_system_json(R"({"size": 2, "orders": []})"); }).field() == "orders");
    CHECK(parse_error([] {
              io::parse_system_json(R"({"size": 2, "orders": [{"keys": [1], "direction": "gain"}]})");
          }).field() == "orders[0].keys");
    CHECK(parse_error([] {
              io::parse_system_json(R"({"size": 1, "orders": [{"keys": [1], "direction": "up"}]})");
          }).field() == "orders[0].direction");
    CHECK(parse_error([] {
              io::parse_system_json(R"({"size": 1, "orders": [{"keys": ["x"], "direction": "gain"}]})");
          }).field() == "orders[0].keys");
}

TEST_CASE("points CSV") {
    const auto s = io::parse_points_csv("x,y\n1,2\n 3.5 , -4\n\n");
    CHECK(s.size() == 2);
    CHECK(s[1].x == 3.5);
    CHECK(io::parse_points_csv(io::emit_points_csv(s)) == s);
    CHECK(io::parse_points_csv("1,2\r\n3,4\r\n").size() == 2);

    CHECK(parse_error([] { io::parse_points_csv("x,y\n1,2\n3,oops\n"); }).line() == 3);
    CHECK(parse_error([] { io::parse_points_csv("1,2,3\n"); }).line() == 1);
    CHECK(parse_error([] { io::parse_points_csv("a,b\n1,2\n"); }).field() == "header");
    CHECK(parse_error([] { io::parse_points_csv("1,2\nnan,3\n"); }).line() == 2);
    CHECK_THROWS_AS(io::parse_points_csv("1,1\n1,1\n"), InjectivityError);
}

TEST_CASE("family JSON") {
    const auto f = io::parse_family_json(
        R"({"elements": ["a","b"], "h": {"a": 2, "b": 1.5}, "family": [["b","a"], [], ["a","a"]]})");
    CHECK(f.members == std::vector<Subset>{{0, 1}, {}, {0}});
    CHECK(io::parse_family_json(io::emit_family_json(f)) == f);
    CHECK(parse_error([] { io::parse_family_json(R"({"elements": ["a"], "h": {}, "family": []})"); }).field() == "h");
    CHECK(parse_error([] {
              io::parse_family_json(R"({"elements": ["a"], "h": {"a": 1}, "family": [["z"]]})");
          }).field() == "family[0]");
}

TEST_CASE("summits CSV") {
    const auto line = io::parse_summits_csv("x,h\n1,3\n2,5\n");
    CHECK_FALSE(line.planar);
    CHECK(line.altitudes == std::vector<double>{3, 5});
    const auto plane = io::parse_summits_csv("0,0,2\n3,0.25,3\n");
    CHECK(plane.planar);
    CHECK(plane.points[1].y == 0.25);
    CHECK(io::parse_summits_csv(io::emit_summits_csv(line)) == line);
    CHECK(io::parse_summits_csv(io::emit_summits_csv(plane)) == plane);
    CHECK(parse_error([] { io::parse_summits_csv("1,2\n1,2,3\n"); }).line() == 2);
}

TEST_CASE("random round trips") {
    gen::Rng rng(81);
    std::uniform_real_distribution<double> real(-1e3, 1e3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto r = gen::relation(rng, gen::uniform(rng, 0, 9), 0.3);
        CHECK(io::parse_relation_json(io::emit_relation_json(r)) == r);

        std::vector<Point2> pts;
        for (std::size_t i = 0, n = gen::uniform(rng, 0, 12); i < n; ++i) pts.push_back({real(rng), real(rng)});
        const PointSet2D s(pts);
        CHECK(io::parse_points_csv(io::emit_points_csv(s)) == s);

        const auto sys = gen::to_system(gen::raw_system(rng, gen::uniform(rng, 1, 6), gen::uniform(rng, 1, 3), 9));
        const auto text = io::emit_system_json(sys);
        CHECK(io::emit_system_json(io::parse_system_json(text)) == text);
    }
}

TEST_CASE("every fixture round-trips") {
    for (const auto& entry : fs::directory_iterator(ALTISET_FIXTURE_DIR)) {
        const auto name = entry.path().filename().string();
        if (name.rfind("bad_", 0) == 0 || name.rfind("duplicate_", 0) == 0) continue;
        const auto text = slurp(entry.path());
        CAPTURE(name);
        if (name.rfind("points", 0) == 0) {
            const auto v = io::parse_points_csv(text);
            CHECK(io::parse_points_csv(io::emit_points_csv(v)) == v);
        } else if (name.rfind("summits", 0) == 0) {
            const auto v = io::parse_summits_csv(text);
            CHECK(io::parse_summits_csv(io::emit_summits_csv(v)) == v);
        } else if (name.rfind("family", 0) == 0) {
            const auto v = io::parse_family_json(text);
            CHECK(io::parse_family_json(io::emit_family_json(v)) == v);
        } else if (name.rfind("system", 0) == 0) {
            const auto once = io::emit_system_json(io::parse_system_json(text));
            CHECK(io::emit_system_json(io::parse_system_json(once)) == once);
        } else {
            const auto v = io::parse_relation_json(text);
            CHECK(io::parse_relation_json(io::emit_relation_json(v)) == v);
        }
    }
}

} // TEST_SUITE
