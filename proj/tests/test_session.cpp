#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fg/session.hpp"

using namespace fg;

namespace {

std::string example_att_source() {
    std::ifstream in(std::string(FG_SOURCE_DIR) + "/sessions/example_att.fg");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string field_of(const Report& rep, const std::string& key) {
    for (auto& [k, v] : rep.fields)
        if (k == key) return v;
    FAIL("missing field ", key);
    return "";
}

}  // namespace

TEST_CASE("parse: example session yields one ring, three bindings, two commands") {
    Session s = parse_session(example_att_source());
    CHECK(s.ring_name == "R");
    CHECK(s.ring->nvars() == 2);
    CHECK(s.ring->grading == Grading::fine);
    CHECK(s.binding_order == std::vector<std::string>{"m", "M", "N"});
    CHECK(s.ideals.at("m").size() == 2);
    CHECK(s.modules.at("M").ngens() == 1);
    CHECK(s.modules.at("N").ngens() == 2);
    REQUIRE(s.commands.size() == 2);
    CHECK(s.commands[0].name == "att-top");
    CHECK(s.commands[1].name == "att-top-local");
    CHECK(*s.commands[0].arg("M") == "M");
}

TEST_CASE("parse: empty input is an empty session") {
    Session s = parse_session("   # only a comment\n");
    CHECK_FALSE(s.ring);
    CHECK(s.commands.empty());
}

TEST_CASE("parse: diagnostics carry line and column") {
    SUBCASE("unknown statement") {
        try {
            parse_session("ring R = Q[x];\nbogus;\n");
            FAIL("expected a parse error");
        } catch (const error& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
            CHECK(std::string(e.what()).find("bogus") != std::string::npos);
        }
    }
    SUBCASE("ragged presentation matrix") {
        try {
            parse_session("ring R = Q[x,y];\nmodule M = coker [[x, y], [x]];\n");
            FAIL("expected a parse error");
        } catch (const error& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
            CHECK(std::string(e.what()).find("unequal") != std::string::npos);
        }
    }
    SUBCASE("binding before the ring") {
        CHECK_THROWS_WITH_AS(parse_session("ideal a = (x);"),
                             doctest::Contains("no ring declared"), error);
    }
    SUBCASE("duplicate binding") {
        CHECK_THROWS_WITH_AS(
            parse_session("ring R = Q[x];\nideal a = (x);\nideal a = (x);\n"),
            doctest::Contains("already bound"), error);
    }
}

TEST_CASE("parse: coker twists and Fp fields round through") {
    Session s = parse_session(
        "ring R = F7[x,y];\n"
        "module M = coker [[x, y^2], [0, x]] twists (0,1);\n");
    const FPModule& M = s.modules.at("M");
    REQUIRE(M.ngens() == 2);
    CHECK(M.gen_twists[0] == Degree{0});
    CHECK(M.gen_twists[1] == Degree{1});
    CHECK(M.rels.size() == 2);
}

TEST_CASE("run: fgrad with both certificates") {
    Session s = parse_session(
        "ring R = Q[x,y] graded fine;\n"
        "ideal a = (x);\n"
        "ideal b = (y);\n"
        "fgrad a=a b=b M=R window=[-4..4];\n");
    auto reps = run(s);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].verdict == "OK");
    CHECK_FALSE(reps[0].failed);
    CHECK(field_of(reps[0], "value") == "1");
    CHECK(field_of(reps[0], "ext_certificate") == "1");
    CHECK(field_of(reps[0], "lc_certificate") == "1");
}

TEST_CASE("run: fgrad infinity uses the sentinel") {
    Session s = parse_session(
        "ring R = Q[x,y];\n"
        "module M = cyclic (x);\n"
        "fgrad a=(x) b=(x) M=M;\n");
    auto reps = run(s);
    CHECK(field_of(reps[0], "value") == "infinity");
    CHECK(field_of(reps[0], "ext_certificate") == "none");
}

TEST_CASE("run: att-top on the example session") {
    Session s = parse_session(example_att_source());
    auto reps = run(s);
    REQUIRE(reps.size() == 2);
    CHECK(field_of(reps[0], "att") == "{(x)}");
    CHECK(field_of(reps[0], "routes_agree") == "true");
    CHECK(field_of(reps[0], "n") == "1");
    CHECK(field_of(reps[0], "d") == "1");  // pd M; top index is n + d = 2
    // Hom(M,-) drops (y) from the top attached primes of N alone.
    std::string local = field_of(reps[1], "att");
    CHECK(local.find("(x)") != std::string::npos);
    CHECK(local.find("(y)") != std::string::npos);
}

TEST_CASE("run: ns-verify passes and failed preconditions give FAIL") {
    Session s = parse_session(
        "ring R = Q[x,y] graded fine;\n"
        "ns-verify a=(x,y) xs=[x] M=R N=R window=[-3..3];\n");
    auto reps = run(s);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].verdict == "PASS");
    CHECK_FALSE(reps[0].failed);

    Session bad = parse_session(
        "ring R = Q[x,y] graded fine;\n"
        "module N = cyclic (x*y);\n"
        "ns-verify a=(x,y) xs=[y] M=R N=N window=[-2..2];\n");
    auto bad_reps = run(bad);
    CHECK(bad_reps[0].verdict == "FAIL");
    CHECK(bad_reps[0].failed);
}

TEST_CASE("run: filter-check reports per-step verdicts without failing the run") {
    Session s = parse_session(
        "ring R = Q[x,y] graded fine;\n"
        "module N = cyclic (x*y);\n"
        "filter-check a=(x,y) xs=[y] M=N;\n");
    auto reps = run(s);
    CHECK(reps[0].verdict == "OK");
    CHECK_FALSE(reps[0].failed);
    CHECK(field_of(reps[0], "value") == "false");
}

TEST_CASE("run: runtime errors carry the command index") {
    Session s = parse_session(
        "ring R = Q[x,y];\n"
        "fgrad a=(x) b=(x) M=Missing;\n");
    CHECK_THROWS_WITH_AS(run(s), doctest::Contains("command 0"), error);
}

TEST_CASE("emit: json has schema_version 1 and the infinity sentinel as a string") {
    Session s = parse_session(
        "ring R = Q[x,y];\n"
        "module M = cyclic (x);\n"
        "fgrad a=(x) b=(x) M=M;\n");
    auto reps = run(s);
    std::string j = emit(reps[0], "json");
    CHECK(j.find("\"schema_version\": 1") != std::string::npos);
    CHECK(j.find("\"value\": \"infinity\"") != std::string::npos);
    CHECK(j.find("\"ext_certificate\": \"none\"") != std::string::npos);
}

TEST_CASE("emit: tsv applies only to table commands and rows round-trip") {
    Session s = parse_session(
        "ring R = Q[x,y] graded fine;\n"
        "cech-table a=(x,y) N=R window=[-2..0];\n"
        "hilbert M=R window=[-1..1];\n");
    auto reps = run(s);
    std::string tsv = emit(reps[0], "tsv");

    // reference parse of the TSV text
    std::stringstream ss(tsv);
    std::string lne;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(ss, lne)) {
        std::vector<std::string> row;
        std::stringstream ls(lne);
        std::string cell;
        while (std::getline(ls, cell, '\t')) row.push_back(cell);
        rows.push_back(row);
    }
    CHECK(rows == reps[0].table);
    REQUIRE(rows.size() > 1);
    CHECK(rows[0] == std::vector<std::string>{"i", "d1", "d2", "dim"});
    // H^2 of Q[x,y] at (x,y) is one-dimensional exactly in the strictly
    // negative multidegrees; H^0 and H^1 vanish.
    int total = 0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        REQUIRE(rows[r].size() == 4);
        total += std::stoi(rows[r][3]);
        bool neg = std::stoi(rows[r][1]) < 0 && std::stoi(rows[r][2]) < 0;
        CHECK(rows[r][3] == ((rows[r][0] == "2" && neg) ? "1" : "0"));
    }
    CHECK(total == 4);

    Session nontab = parse_session(
        "ring R = Q[x,y];\n"
        "module M = cyclic (x);\n"
        "all-artinian a=(x,y) M=M N=M;\n");
    auto nreps = run(nontab);
    CHECK(field_of(nreps[0], "value") == "true");
    CHECK_THROWS_WITH_AS(emit(nreps[0], "tsv"), doctest::Contains("table"), error);
}

TEST_CASE("emit: hilbert values over the standard grading") {
    Session s = parse_session(
        "ring R = Q[x,y];\n"
        "module M = cyclic (x^2, x*y, y^2);\n"
        "hilbert M=M window=[0..3];\n");
    auto reps = run(s);
    CHECK(field_of(reps[0], "values") == "1,2,0,0");
}

TEST_CASE("print/parse: canonical form is a fixed point") {
    std::string src = example_att_source();
    std::string once = print_session(parse_session(src));
    std::string twice = print_session(parse_session(once));
    CHECK(once == twice);
    // canonical form preserves semantics
    Session a = parse_session(src);
    Session b = parse_session(once);
    CHECK(a.binding_order == b.binding_order);
    CHECK(a.commands.size() == b.commands.size());
    auto ra = run(a), rb = run(b);
    REQUIRE(ra.size() == rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) CHECK(ra[i].fields == rb[i].fields);
}
