#include <doctest.h>

#include <random>

#include "minunion/corpus.hpp"
#include "minunion/io.hpp"
#include "test_util.hpp"

using namespace minunion;

TEST_CASE("parse_instance: basic file") {
    const Instance inst = parse_instance("set a : 0 1\nset b : 10 11\n");
    CHECK(inst.labels() == std::vector<std::string>{"a", "b"});
    CHECK(inst.set("a") == std::vector<Value>{0, 1});
    CHECK(inst.set("b") == std::vector<Value>{10, 11});
}

TEST_CASE("parse_instance: comments, blanks, negative values, no trailing newline") {
    const Instance inst =
        parse_instance("# corpus\n\nset x_1 : -5 3   7 # inline note\nset (y-2) : 0");
    CHECK(inst.size() == 2);
    CHECK(inst.set("x_1") == std::vector<Value>{-5, 3, 7});
    CHECK(inst.set("(y-2)") == std::vector<Value>{0});
}

TEST_CASE("parse_instance error cases carry line numbers") {
    auto expect_error = [](std::string_view text, std::size_t line) {
        try {
            parse_instance(text);
            FAIL("expected ParseError for: ", text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_error("set a :\n", 1);                       // empty set
    expect_error("set a : 1\nset a : 2\n", 2);          // duplicate label
    expect_error("set a : one\n", 1);                   // non-integer token
    expect_error("set a : 99999999999999999999\n", 1);  // overflow
    expect_error("set a$ : 1\n", 1);                    // bad label charset
    expect_error("set a 1 2\n", 1);                     // missing colon
    expect_error("group a : 1\n", 1);                   // unknown directive
    expect_error("", 1);                                // no sets at all
    expect_error("# only a comment\n", 1);
}

TEST_CASE("instance rendering round-trips") {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 100; ++trial) {
        const Instance inst = random_instance(rng);
        CHECK(parse_instance(render_instance(inst)) == inst);
    }
}

TEST_CASE("parse_graph: single edge and triangle") {
    const Graph g = parse_graph("edge 1 2\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);

    const Graph t = parse_graph("edge 1 2\nedge 2 3\nedge 1 3\n");
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);
}

TEST_CASE("parse_graph: vertices header allows isolated vertices") {
    const Graph g = parse_graph("vertices 4\nedge 1 2\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_vertex("4"));
}

TEST_CASE("parse_graph error cases") {
    CHECK_THROWS_AS(parse_graph("edge 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("edge 1 2\nedge 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("edge 0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertices 2\nedge 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("edge 1 2\nvertices 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertices 2\nvertices 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("link 1 2\n"), ParseError);
}

TEST_CASE("certificate files parse, bind, and render") {
    const Instance inst = parse_instance("set a : 0 1\nset b : 10 11\n");
    const ParsedCertificate parsed = parse_certificate("tree a b 10\nbudget 2\n");
    REQUIRE(parsed.budget.has_value());
    const Certificate cert = bind_certificate(parsed, inst);
    CHECK(cert.budget == 2);
    CHECK(cert.tree.weight("a", "b") == 10);

    const std::string rendered = render_certificate(cert);
    const ParsedCertificate again = parse_certificate(rendered);
    CHECK(again.edges == parsed.edges);
    CHECK(again.budget == parsed.budget);

    // override wins over the file budget
    CHECK(bind_certificate(parsed, inst, 7).budget == 7);
}

TEST_CASE("certificate binding failures") {
    const Instance inst = parse_instance("set a : 0\nset b : 0\n");
    CHECK_THROWS_AS(bind_certificate(parse_certificate("tree a x 0\nbudget 1\n"), inst),
                    InvalidArgumentError);
    CHECK_THROWS_AS(bind_certificate(parse_certificate("tree a b 0\n"), inst),
                    InvalidArgumentError);  // no budget anywhere
    // not a spanning tree: no edges over two labels
    CHECK_THROWS_AS(bind_certificate(parse_certificate("budget 1\n"), inst),
                    InvalidArgumentError);
}

TEST_CASE("certificate parse errors") {
    CHECK_THROWS_AS(parse_certificate("tree a b\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate("tree a a 0\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate("budget -1\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate("budget 1\nbudget 2\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate("weights a b 0\n"), ParseError);
}

TEST_CASE("parse_instance tolerates duplicate elements") {
    const Instance inst = parse_instance("set a : 0 0 1\n");
    CHECK(inst.set("a") == std::vector<Value>{0, 1});
}

TEST_CASE("parsers never crash on junk input") {
    std::mt19937_64 rng(401);
    const std::string alphabet = "set a:019- \n#edgvertx()_\t$\xc3\xa9";
    for (int trial = 0; trial < 500; ++trial) {
        std::string text;
        const std::size_t len = testutil::draw(rng, 80);
        for (std::size_t i = 0; i < len; ++i)
            text += alphabet[testutil::draw(rng, alphabet.size())];
        try {
            (void)parse_instance(text);
        } catch (const ParseError&) {
        }
        try {
            (void)parse_graph(text);
        } catch (const ParseError&) {
        }
        try {
            (void)parse_certificate(text);
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("digest is stable") {
    CHECK(input_digest("") == "cbf29ce484222325");
    CHECK(input_digest("set a : 0\n") != input_digest("set a : 1\n"));
    CHECK(input_digest("abc") == input_digest("abc"));
}

TEST_CASE("shift vectors round-trip through JSON") {
    const ShiftVector sv = ShiftVector::create({{"root", 0}, {"e(1-2)", -216}});
    const ShiftVector back = shifts_from_json(shifts_to_json(sv));
    CHECK(back.at("root") == 0);
    CHECK(back.at("e(1-2)") == -216);
    CHECK(back.size() == 2);

    CHECK_THROWS_AS(shifts_from_json(nlohmann::json::array()), InvalidArgumentError);
}

TEST_CASE("run reports re-evaluate their shifts") {
    const Instance inst = parse_instance("set a : 0 1\nset b : 10 11\n");
    const SolveResult result = solve_exact(inst);
    const RunReport report = make_run_report("solve", "deadbeef", inst, result, 1.5);
    CHECK(report.value == result.value);
    const nlohmann::json j = report.to_json();
    CHECK(j["method"] == "exact");
    CHECK(j["value"] == 2);
    CHECK(j["optimal"] == true);
    CHECK(j["shifts"].is_object());
    CHECK(j["input_digest"] == "deadbeef");

    SolveResult lying = result;
    lying.value += 1;
    CHECK_THROWS_AS(make_run_report("solve", "deadbeef", inst, lying, 0.0), Error);
}
