#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thl/commands.hpp"
#include "thl/config.hpp"
#include "thl/errors.hpp"
#include "thl/fixtures.hpp"
#include "thl/report.hpp"

#include <fstream>
#include <sstream>

using namespace thl;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string data_dir = THL_TEST_DATA_DIR;

// Q[x]/(x^2) with Z/2; the pieces are substituted to make broken configs.
std::string config_text(const std::string& mult, const std::string& action_s) {
    return R"({"algebra": {"basis": ["1", "x"], "unit": 0, "mult": )" + mult +
           R"(}, "group": {"elements": ["e", "s"], "table": [["e", "s"], ["s", "e"]],
              "action": {"e": [[1, 0], [0, 1]], "s": )" + action_s + "}}}";
}

const std::string good_mult = "[[[1, 0], [0, 1]], [[0, 1], [0, 0]]]";
const std::string good_s = R"([[1, 0], [0, "-1"]])";

DimTable table(const Report& r, const std::string& theory) {
    for (auto& t : r.tables)
        if (t.theory == theory) return t;
    FAIL("missing table " << theory);
    return {};
}

} // namespace

TEST_CASE("config file matches the built-in fixture") {
    JobConfig job = load_config(data_dir + "/trunc_poly_z2.json");
    const Fixture& f = find_fixture("trunc-poly-z2");
    CHECK(job.name == "trunc-poly-z2");
    CHECK(job.algebra.mult == f.algebra.mult);
    CHECK(job.algebra.unit == f.algebra.unit);
    CHECK(job.group.table == f.group.table);
    for (std::size_t g = 0; g < 2; ++g) CHECK(job.group.action[g].matrix == f.group.action[g].matrix);
    CHECK(job.max_degree() == 3);
    CHECK(job.twist_element() == 1);
    CHECK(job.task.format == "machine");
}

TEST_CASE("config errors") {
    CHECK_NOTHROW(parse_config(config_text(good_mult, good_s)));
    CHECK_THROWS_AS(parse_config(config_text(good_mult, R"([[1, 0], [0, "1/0"]])")), ParseError);
    CHECK_THROWS_AS(parse_config("{\"algebra\": "), ParseError);
    CHECK_THROWS_AS(parse_config("{}"), ParseError);
    CHECK_THROWS_AS(load_config(data_dir + "/does_not_exist.json"), ParseError);

    try {
        parse_config(config_text(good_mult, R"([[1, 0], [0, "x"]])"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("group.action.s") != std::string::npos);
    }

    // With x x = 1, x -> 1 + x is not multiplicative.
    CHECK_THROWS_AS(parse_config(config_text("[[[1, 0], [0, 1]], [[0, 1], [1, 0]]]", "[[1, 0], [1, 1]]")), ActionError);

    // s(1) = -1 does not preserve the unit.
    CHECK_THROWS_AS(parse_config(config_text(good_mult, R"([["-1", 0], [0, "-1"]])")), ActionError);

    JobConfig job = parse_config(config_text(good_mult, good_s));
    job.task.twist = "t";
    CHECK_THROWS_AS(job.twist_element(), ValidationError);
}

TEST_CASE("non-associative table names the triple") {
    // Basis (1, a, b): a a = b, a b = 0, b a = a.
    std::string mult = R"([[[1,0,0],[0,1,0],[0,0,1]], [[0,1,0],[0,0,1],[0,0,0]], [[0,0,1],[0,1,0],[0,0,0]]])";
    std::string text = R"({"algebra": {"basis": ["1", "a", "b"], "unit": 0, "mult": )" + mult + "}}";
    try {
        parse_config(text);
        FAIL("expected AlgebraError");
    } catch (const AlgebraError& e) {
        CHECK(std::string(e.what()).find("(a, a, a)") != std::string::npos);
    }
}

TEST_CASE("run validate and unknown commands") {
    JobConfig job = fixture_job("trunc-poly-z2");
    Report r = run("validate", job);
    CHECK(r.passed());
    CHECK_THROWS_AS(run("no-such-command", job), ValidationError);
    CHECK_THROWS_AS(fixture_job("no-such-fixture"), ValidationError);
    for (auto& c : command_names()) CHECK(!c.empty());
}

TEST_CASE("report emission") {
    Report empty;
    empty.job = "empty";
    empty.command = "validate";
    std::string m = emit_machine(empty);
    CHECK(m.find("\"kind\":\"header\"") != std::string::npos);
    CHECK(m.find("\"kind\":\"dim\"") == std::string::npos);
    CHECK(!emit_human(empty).empty());

    Report q = run("hc-twisted", fixture_job("ground-field"));
    DimTable t = table(q, "HC^e");
    CHECK(t.dims == std::vector<std::size_t>{1, 0, 1, 0});
    std::string qm = emit_machine(q);
    for (const char* field : {"\"theory\"", "\"degree\"", "\"dim\""}) CHECK(qm.find(field) != std::string::npos);
}

TEST_CASE("machine round trip and determinism") {
    JobConfig job = fixture_job("trunc-poly-z2");
    Report r = run("verify-identities", job);
    CHECK(r.passed());
    std::string m = emit_machine(r);
    Report back = parse_machine(m);
    CHECK(back.tables == r.tables);
    CHECK(back.checks == r.checks);
    CHECK(back.notes == r.notes);
    CHECK(emit_machine(back) == m);
    CHECK(emit_machine(run("verify-identities", job)) == m);
}

TEST_CASE("failed checks carry a residual location") {
    Report r;
    r.add_check("b o b = 0", "(p,q)=(1,1)", false, "(e,s / 1,x) -> 2");
    CHECK_FALSE(r.passed());
    std::string h = emit_human(r);
    CHECK(h.find("(e,s / 1,x)") != std::string::npos);
    std::string m = emit_machine(r);
    CHECK(m.find("\"verdict\":\"fail\"") != std::string::npos);
}

TEST_CASE("commands on the Z/2 example") {
    JobConfig job = fixture_job("trunc-poly-z2");
    Report crossed = run("hc-crossed", job);
    CHECK(crossed.passed());
    Report hh = run("hh-G", job);
    CHECK(hh.passed());
    Report lambda = run("hc-lambda", job);
    CHECK(lambda.passed());
    Report sbi = run("verify-sbi", job);
    CHECK(sbi.passed());
    Report lemma = run("verify-lemma", job);
    CHECK(lemma.passed());
}
