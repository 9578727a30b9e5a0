#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "calab/corpus.hpp"
#include "calab/dsl.hpp"

using namespace calab;

namespace {
std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}
}

TEST_CASE("three-statement session parses") {
    ast::Session s = parse_session(
        "ring R = poly(Q,[x,y])/(x*y); module M = quotient(R,(x^2)); "
        "check reflexive(tensor(M, syzygy(quotient(R,(x)),2)));");
    CHECK(s.stmts.size() == 3);
    CHECK(s.stmts[0].kind == ast::Stmt::Kind::ring_def);
    CHECK(s.stmts[1].kind == ast::Stmt::Kind::module_def);
    CHECK(s.stmts[2].kind == ast::Stmt::Kind::check);
}

TEST_CASE("empty session") {
    CHECK(parse_session("").stmts.empty());
    CHECK(parse_session("  -- only a comment\n").stmts.empty());
}

TEST_CASE("undefined names carry their location") {
    try {
        run_session_text("module M = quotient(S,(x));");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(std::string(e.what()).find("S") != std::string::npos);
    }

    try {
        run_session_text("ring R = poly(Q, [x, y]) / (x*y);\ncheck reflexive(Nope);");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("redefinitions are rejected") {
    CHECK_THROWS_AS(run_session_text("ring R = poly(Q, [x, y]);\nideal R = (x);"), ParseError);
}

TEST_CASE("print/parse round trip is a fixed point") {
    std::vector<std::string> sources;
    for (const auto& e : corpus_entries())
        if (!e.session.empty()) sources.push_back(e.session);
    sources.push_back(
        "ring R = poly(Q, [x, y]) / (x*y);\nlet d = depth((x), free(R, 1));\n"
        "assert d <= inf;\ncheck lbl: iso(dual(free(R, 2)), free(R, 2)) expect verified;\n");
    for (const auto& src : sources) {
        std::string once = print_session(parse_session(src));
        std::string twice = print_session(parse_session(once));
        CHECK(once == twice);
    }
}

TEST_CASE("single-token corruption reports the corrupted line") {
    std::string session =
        "ring R = poly(Q, [x, y]) / (x*y);\n"
        "prime! p = (x);\n"
        "module M = quotient(R, (x^2));\n"
        "check reflexive(M);\n"
        "assert depth((x), M) == 0;\n";
    // replace each token-ish word with a lexically invalid character
    std::vector<std::pair<size_t, int>> spots;
    int line = 1;
    for (size_t i = 0; i < session.size(); ++i) {
        if (session[i] == '\n') ++line;
        if (std::isalnum(static_cast<unsigned char>(session[i]))) spots.push_back({i, line});
    }
    int checked = 0;
    for (size_t k = 0; k < spots.size(); k += 7) {
        std::string corrupted = session;
        corrupted[spots[k].first] = '?';
        try {
            parse_session(corrupted);
            // '?' might be swallowed into a raw polynomial region only if the
            // lexer accepted it; it never does
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == spots[k].second);
        }
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("definitions-only session yields no entries") {
    auto reports = run_session_text("ring R = poly(Q, [x, y]) / (x*y); module M = quotient(R, (x));");
    CHECK(reports.empty());
}

TEST_CASE("assert failures refute and continue") {
    auto reports = run_session_text(
        "ring R = poly(Q, [x, y]) / (x*y);\n"
        "module M = quotient(R, (x));\n"
        "assert depth((y), M) == 7;\n"
        "assert depth((y), M) == 1;\n");
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].verdict == CheckVerdict::refuted);
    CHECK(reports[1].verdict == CheckVerdict::verified);
}

TEST_CASE("minimal-prime tensor session gives the expected pair of verdicts") {
    auto reports = run_session_text(
        "ring R = poly(Q, [x, y]) / (x*y);\n"
        "module p = ideal_module(R, (x));\n"
        "module q = ideal_module(R, (y));\n"
        "check pp: reflexive(tensor(p, p));\n"
        "check pq: reflexive(tensor(p, q));\n");
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].verdict == CheckVerdict::verified);
    CHECK(reports[1].verdict == CheckVerdict::refuted);
}

TEST_CASE("scalar evaluation against a session") {
    std::string defs =
        "ring R = poly(Q, [x, y, z, w]) / (x*y);\n"
        "prime! p = (y, z, w);\n"
        "module M = quotient(R, (x));\n";
    CHECK(evaluate_scalar_in_session(defs, "depth((y,z,w), M)") == "3");
    CHECK(evaluate_scalar_in_session(defs, "height(p)") == "2");
    CHECK(evaluate_scalar_in_session(defs, "pd(M)") == "inf");
}

TEST_CASE("prime-field sessions evaluate") {
    auto reports = run_session_text(
        "ring R = poly(Fp(32003), [x, y]) / (x*y);\n"
        "module M = quotient(R, (x));\n"
        "assert depth((y), M) == 1;\n");
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].verdict == CheckVerdict::verified);
}

TEST_CASE("json reports have stable shape and key order") {
    auto reports = run_session_text(
        "ring R = poly(Q, [x, y]) / (x*y);\n"
        "module M = quotient(R, (x));\n"
        "check m_reflexive: reflexive(M);\n");
    std::string a = reports_to_json(reports, "hash", "time");
    std::string b = reports_to_json(reports, "hash", "time");
    CHECK(a == b);
    CHECK(a.find("\"tool\"") < a.find("\"version\""));
    CHECK(a.find("\"version\"") < a.find("\"session_hash\""));
    CHECK(a.find("\"entries\"") < a.find("\"summary\""));
    CHECK(a.find("m_reflexive") != std::string::npos);
}

TEST_CASE("json reports match the published schema structurally") {
    auto reports = run_session_text(
        "ring R = poly(Q, [x, y]) / (x*y);\n"
        "module M = quotient(R, (x));\n"
        "check m_reflexive: reflexive(M);\n"
        "assert depth((y), M) == 1;\n");
    std::string text = reports_to_json(reports, "hash", "time");
    auto doc = nlohmann::json::parse(text);
    for (const char* key : {"tool", "version", "session_hash", "generated_at", "entries", "summary"})
        CHECK(doc.contains(key));
    CHECK(doc["tool"] == "calab");
    REQUIRE(doc["entries"].is_array());
    for (const auto& e : doc["entries"]) {
        for (const char* key :
             {"id", "statement", "inputs", "verdict", "expected", "as_expected", "values",
              "scope_notes"})
            CHECK(e.contains(key));
        std::string v = e["verdict"];
        CHECK((v == "verified" || v == "refuted" || v == "not-applicable" || v == "unknown"));
        CHECK(e["values"].is_object());
        CHECK(e["scope_notes"].is_array());
    }
    for (const char* key : {"total", "verified", "refuted", "not_applicable", "unknown", "unexpected"})
        CHECK(doc["summary"].contains(key));
}

TEST_CASE("shipped session files stay in sync with the corpus") {
    for (const auto& e : corpus_entries()) {
        if (e.session.empty()) continue;
        std::string path = std::string(CALAB_SOURCE_DIR) + "/sessions/" + e.id + ".cl";
        std::string file_text = read_file(path);
        CHECK(print_session(parse_session(file_text)) == print_session(parse_session(e.session)));
    }
}
