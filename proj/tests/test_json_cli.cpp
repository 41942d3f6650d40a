// JSON documents and the command-line tool driven end to end.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "egk/edgelist.hpp"
#include "egk/generate.hpp"
#include "egk/json_io.hpp"
#include "util.hpp"

namespace {

using namespace egk;

struct CmdResult {
    int code = -1;
    std::string out;
};

CmdResult run_cmd(const std::string& cmd) {
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
    int status = pclose(p);
    CmdResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = std::move(out);
    return r;
}

std::string egk_bin() { return std::string("\"") + EGK_BIN + "\""; }

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> ls;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            ls.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) ls.push_back(cur);
    return ls;
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto dir = std::filesystem::temp_directory_path() / "egk-cli-tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    f.close();
    return path.string();
}

}  // namespace

TEST_CASE("trace documents serialize to stable bytes and round-trip") {
    Graph c5 = testutil::cycle(5);
    auto t = proof_trace(c5);
    CertificateDocument doc;
    doc.input = serialize_graph6(c5);
    doc.verdict = "tight";
    doc.quantities = {2, 2, 2, 2, 4, 4};
    doc.certificate = certificate_json(t);

    const std::string expected =
        R"({"schema_version":"egk/1","input":"Dhc","verdict":"tight",)"
        R"("quantities":{"delta":2,"Delta":2,"alpha":2,"mu":2,"lhs":4,"rhs":4},)"
        R"("certificate":{"kind":"trace","independent":[0,2],"rest":[1,3,4],)"
        R"("h_edges":[[0,1],[0,4],[1,2],[2,3]],"h_matching":[[0,1],[2,3]],"h_cover":[0,2],)"
        R"("k":2,"cross":0,"min_degree":2,"max_degree":2,"alpha":2,"mu_h":2,"mu_g":2,)"
        R"("chain_low":[0,0,0,0],"chain_main":[4,4,4,4]})"
        "}";
    REQUIRE(document_line(doc) == expected);

    auto parsed = parse_document(expected);
    REQUIRE(parsed.graph.vertex_count() == 5);
    REQUIRE(parsed.verdict == "tight");
    REQUIRE(parsed.quantities.alpha == 2);
    REQUIRE(verify_certificate_json(parsed.graph, parsed.certificate).empty());
    CertificateDocument rebuilt{doc.input, parsed.verdict, parsed.quantities, parsed.certificate};
    REQUIRE(document_line(rebuilt) == expected);

    ProofTrace back = trace_from_json(parsed.certificate, parsed.graph);
    REQUIRE(verify_trace(parsed.graph, back));
}

TEST_CASE("null quantities serialize as JSON null and parse back") {
    Graph k2 = testutil::complete(2);
    CertificateDocument doc;
    doc.input = serialize_graph6(k2);
    doc.verdict = "strict";
    doc.quantities.delta = 1;
    doc.quantities.Delta = 1;
    doc.certificate = certificate_none("quantities only");
    const std::string line = document_line(doc);
    REQUIRE(line.find("\"alpha\":null") != std::string::npos);
    REQUIRE(line.find("\"lhs\":null") != std::string::npos);
    auto parsed = parse_document(line);
    REQUIRE_FALSE(parsed.quantities.alpha.has_value());
    REQUIRE_FALSE(parsed.quantities.rhs.has_value());
    REQUIRE(parsed.quantities.delta == 1);
}

TEST_CASE("every certificate kind verifies after a JSON round trip") {
    SECTION("biregular") {
        Graph g = testutil::complete_bipartite(2, 3);
        auto out = recognize_biregular_extremal(g);
        REQUIRE(out.certificate.has_value());
        Json j = certificate_json(*out.certificate);
        REQUIRE(verify_certificate_json(g, Json::parse(j.dump())).empty());
        auto back = biregular_from_json(Json::parse(j.dump()), g);
        REQUIRE(verify_biregular(g, back));
    }
    SECTION("special with bubbles, two components") {
        Graph g = testutil::disjoint_union(testutil::k33(), testutil::spider16());
        auto res = is_extremal(g);
        REQUIRE(res.verdict == Verdict::tight);
        REQUIRE(res.specials.size() == 2);
        Json j = certificate_json(res.specials);
        REQUIRE(verify_certificate_json(g, Json::parse(j.dump())).empty());
    }
    SECTION("witness") {
        auto res = is_extremal(testutil::spider16());
        REQUIRE(res.witnesses.has_value());
        Json j = certificate_json(*res.witnesses);
        REQUIRE(verify_certificate_json(testutil::spider16(), Json::parse(j.dump())).empty());
    }
    SECTION("bubble") {
        auto e = bubble_catalog("b9");
        Json j = certificate_json(e.cert);
        REQUIRE(verify_certificate_json(e.graph, Json::parse(j.dump())).empty());
        auto back = bubble_from_json(Json::parse(j.dump()), e.graph);
        REQUIRE(is_bubble_certificate(e.graph, back));
    }
    SECTION("trace on a strict graph") {
        Graph p = testutil::petersen();
        Json j = certificate_json(proof_trace(p));
        REQUIRE(verify_certificate_json(p, Json::parse(j.dump())).empty());
    }
}

TEST_CASE("tampered certificates are rejected after parsing") {
    SECTION("biregular with a vertex moved across sides") {
        Graph g = testutil::complete_bipartite(2, 3);
        Json j = certificate_json(*recognize_biregular_extremal(g).certificate);
        j["low_side"].erase(0);
        j["high_side"].push_back(j["high_side"][0].get<int>() == 0 ? 2 : 0);
        REQUIRE_FALSE(verify_certificate_json(g, j).empty());
    }
    SECTION("witness with a dropped matching edge") {
        auto res = is_extremal(testutil::spider16());
        Json j = certificate_json(*res.witnesses);
        j["matching"].erase(0);
        REQUIRE_FALSE(verify_certificate_json(testutil::spider16(), j).empty());
    }
    SECTION("special with swapped core sides") {
        // note: for a bipartite cubic graph without bubbles both side
        // orientations verify, so tamper with a bubbled decomposition,
        // where the bridges pin the deficient side
        auto res = is_extremal(testutil::spider16());
        Json j = certificate_json(res.specials);
        std::swap(j["components"][0]["core_i"], j["components"][0]["core_r"]);
        REQUIRE_FALSE(verify_certificate_json(testutil::spider16(), j).empty());
    }
    SECTION("bubble with the wrong contact") {
        auto e = bubble_catalog("b5");
        Json j = certificate_json(e.cert);
        j["contact"] = 3;
        REQUIRE_FALSE(verify_certificate_json(e.graph, j).empty());
    }
    SECTION("trace with a perturbed chain entry") {
        Graph c5 = testutil::cycle(5);
        Json j = certificate_json(proof_trace(c5));
        j["chain_main"][1] = 5;
        REQUIRE_FALSE(verify_certificate_json(c5, j).empty());
    }
    SECTION("special whose components do not cover the graph") {
        Graph g = testutil::disjoint_union(testutil::k33(), testutil::cube());
        auto res = is_extremal(g);
        Json j = certificate_json(res.specials);
        j["components"].erase(1);
        auto problems = verify_certificate_json(g, j);
        REQUIRE_FALSE(problems.empty());
        REQUIRE(problems[0].find("components") != std::string::npos);
    }
}

TEST_CASE("document parsing validates shape and vertex ids") {
    Graph c5 = testutil::cycle(5);
    CertificateDocument doc;
    doc.input = serialize_graph6(c5);
    doc.verdict = "tight";
    doc.quantities = {2, 2, 2, 2, 4, 4};
    doc.certificate = certificate_none("");
    const std::string good = document_line(doc);

    auto corrupt = [&](const std::string& from, const std::string& to) {
        std::string s = good;
        auto pos = s.find(from);
        REQUIRE(pos != std::string::npos);
        s.replace(pos, from.size(), to);
        return s;
    };

    REQUIRE_THROWS_AS(parse_document(corrupt("egk/1", "egk/2")), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_document(corrupt("\"tight\"", "\"maybe\"")), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_document(corrupt("\"alpha\":2", "\"alpha\":2.5")),
                      std::invalid_argument);
    REQUIRE_THROWS(parse_document("{not json"));
    // missing field
    REQUIRE_THROWS_AS(parse_document(corrupt("\"verdict\"", "\"verdicts\"")),
                      std::invalid_argument);

    SECTION("vertex ids out of range or duplicated") {
        Json j = Json::parse(R"({"kind":"witness","independent":[0,7],"matching":[]})");
        REQUIRE_THROWS_AS(witness_from_json(j, c5), std::invalid_argument);
        Json dup = Json::parse(R"({"kind":"witness","independent":[1,1],"matching":[]})");
        REQUIRE_THROWS_AS(witness_from_json(dup, c5), std::invalid_argument);
        Json loop = Json::parse(R"({"kind":"witness","independent":[],"matching":[[2,2]]})");
        REQUIRE_THROWS_AS(witness_from_json(loop, c5), std::invalid_argument);
        Json badc = Json::parse(R"({"kind":"bubble","contact":9,"set_i":[],"set_r":[],"edge_xy":[0,1]})");
        REQUIRE_THROWS_AS(bubble_from_json(badc, c5), std::invalid_argument);
    }
    SECTION("trace chain arrays must have four entries") {
        Json j = certificate_json(proof_trace(c5));
        j["chain_low"] = Json::array({1, 2, 3});
        REQUIRE_THROWS_AS(trace_from_json(j, c5), std::invalid_argument);
    }
}

TEST_CASE("cli check reports quantities, verdicts, and exit codes") {
    const std::string c5 = serialize_graph6(testutil::cycle(5));
    const std::string petersen = serialize_graph6(testutil::petersen());

    auto tight = run_cmd("printf '" + c5 + "\\n' | " + egk_bin() + " check -");
    REQUIRE(tight.code == 0);
    REQUIRE(lines_of(tight.out) ==
            std::vector<std::string>{"Dhc tight delta=2 Delta=2 alpha=2 mu=2 lhs=4 rhs=4"});

    auto strict = run_cmd("printf '" + petersen + "\\n' | " + egk_bin() + " check -");
    REQUIRE(strict.code == 3);
    REQUIRE(lines_of(strict.out)[0].find("strict") != std::string::npos);

    auto bad = run_cmd("printf '!!!\\n' | " + egk_bin() + " check -");
    REQUIRE(bad.code == 1);
    REQUIRE(bad.out.empty());

    // input errors take precedence over strict verdicts
    auto mixed = run_cmd("printf '" + petersen + "\\n!!!\\n' | " + egk_bin() + " check -");
    REQUIRE(mixed.code == 1);
    REQUIRE(lines_of(mixed.out).size() == 1);

    auto missing = run_cmd(egk_bin() + " check /no/such/file.g6");
    REQUIRE(missing.code == 1);
}

TEST_CASE("cli extremal emits one verifiable JSON document per graph") {
    const std::string input = serialize_graph6(testutil::complete_bipartite(2, 3)) + "\n" +
                              serialize_graph6(testutil::cycle(5)) + "\n" +
                              serialize_graph6(testutil::spider16()) + "\n" +
                              serialize_graph6(testutil::petersen()) + "\n" +
                              serialize_graph6(testutil::complete(5)) + "\n";
    const std::string path = write_temp("extremal_mix.g6", input);
    auto res = run_cmd(egk_bin() + " extremal " + path + " --json");
    REQUIRE(res.code == 4);  // the K5 line: no structural decision exists
    auto ls = lines_of(res.out);
    REQUIRE(ls.size() == 5);

    const std::vector<std::string> expect_verdict = {"tight", "tight", "tight", "strict",
                                                     "oracle-only"};
    const std::vector<std::string> expect_kind = {"biregular", "witness", "special", "none",
                                                  "none"};
    for (std::size_t i = 0; i < ls.size(); ++i) {
        auto parsed = parse_document(ls[i]);
        REQUIRE(parsed.verdict == expect_verdict[i]);
        REQUIRE(parsed.certificate.at("kind").get<std::string>() == expect_kind[i]);
        REQUIRE(verify_certificate_json(parsed.graph, parsed.certificate).empty());
        REQUIRE(parsed.quantities.mu.has_value());
    }
    // K5 quantities come from the oracle even though no certificate exists
    auto k5 = parse_document(ls[4]);
    REQUIRE(k5.quantities.alpha == 1);
    REQUIRE(k5.quantities.mu == 2);

    auto rerun = run_cmd(egk_bin() + " extremal " + path + " --json");
    REQUIRE(rerun.out == res.out);  // byte-identical output
}

TEST_CASE("cli preserves input order under --jobs") {
    std::string input;
    for (std::uint64_t s = 1; s <= 14; ++s)
        input += serialize_graph6(random_cubic(12, s)) + "\n";
    input += serialize_graph6(testutil::spider16()) + "\n";
    const std::string path = write_temp("jobs_order.g6", input);

    auto serial = run_cmd(egk_bin() + " extremal " + path + " --json");
    auto parallel = run_cmd(egk_bin() + " extremal " + path + " --json --jobs 4");
    REQUIRE(serial.out == parallel.out);
    REQUIRE(serial.code == parallel.code);
    REQUIRE(lines_of(serial.out).size() == 15);
}

TEST_CASE("cli witness, bubble, trace, and oracle subcommands") {
    const std::string spider = serialize_graph6(testutil::spider16());
    const std::string c5 = serialize_graph6(testutil::cycle(5));
    const std::string petersen = serialize_graph6(testutil::petersen());

    auto w = run_cmd("printf '" + spider + "\\n' | " + egk_bin() + " witness -");
    REQUIRE(w.code == 0);
    REQUIRE(lines_of(w.out)[0] == spider + " tight witness |I|=7 |M|=7");

    auto wb = run_cmd("printf '" + petersen + "\\n' | " + egk_bin() + " witness -");
    REQUIRE(wb.code == 3);

    auto b = run_cmd(egk_bin() + " generate bubble --catalog b9 | " + egk_bin() + " bubble -");
    REQUIRE(b.code == 0);
    REQUIRE(lines_of(b.out)[0].find("bubble contact=") != std::string::npos);

    auto nb = run_cmd("printf '" + c5 + "\\n' | " + egk_bin() + " bubble -");
    REQUIRE(nb.code == 3);

    auto t = run_cmd("printf '" + c5 + "\\n' | " + egk_bin() + " trace -");
    REQUIRE(t.code == 0);
    REQUIRE(lines_of(t.out)[0] ==
            "Dhc tight k=2 cross=0 chain_low=[0,0,0,0] chain_main=[4,4,4,4]");

    auto tp = run_cmd("printf '" + petersen + "\\n' | " + egk_bin() + " trace - --json");
    REQUIRE(tp.code == 3);
    auto parsed = parse_document(lines_of(tp.out)[0]);
    REQUIRE(parsed.verdict == "strict");
    REQUIRE(verify_certificate_json(parsed.graph, parsed.certificate).empty());

    auto o = run_cmd("printf '" + petersen + "\\n' | " + egk_bin() + " oracle -");
    REQUIRE(o.code == 3);
    REQUIRE(lines_of(o.out)[0].find("alpha=4 mu=5") != std::string::npos);
}

TEST_CASE("cli generate is seeded and deterministic") {
    auto a = run_cmd(egk_bin() + " generate cubic --n 12 --seed 9 --count 3");
    auto b = run_cmd(egk_bin() + " generate cubic --n 12 --seed 9 --count 3");
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(lines_of(a.out).size() == 3);
    for (const auto& line : lines_of(a.out)) {
        Graph g = parse_graph6(line);
        REQUIRE(g.vertex_count() == 12);
        REQUIRE(is_regular(g, 3));
    }

    auto s = run_cmd(egk_bin() +
                     " generate special --core-high 2 --bubbles 3 --sizes 5,7,9 --seed 13 --json");
    REQUIRE(s.code == 0);
    auto parsed = parse_document(lines_of(s.out)[0]);
    REQUIRE(parsed.verdict == "tight");
    REQUIRE(parsed.certificate.at("kind").get<std::string>() == "special");
    REQUIRE(verify_certificate_json(parsed.graph, parsed.certificate).empty());

    auto br = run_cmd(egk_bin() + " generate biregular --low 3 --high 4 --scale 2 --seed 1 --json");
    REQUIRE(br.code == 0);
    auto brdoc = parse_document(lines_of(br.out)[0]);
    REQUIRE(brdoc.verdict == "tight");
    REQUIRE(brdoc.quantities.lhs == brdoc.quantities.rhs);

    auto bad = run_cmd(egk_bin() + " generate special --bubbles 4");
    REQUIRE(bad.code == 1);
}

TEST_CASE("cli reads edge lists by extension or explicit format") {
    const std::string el = serialize_edge_list(testutil::cycle(5));
    const std::string path = write_temp("one.el", el);
    auto byext = run_cmd(egk_bin() + " check " + path);
    REQUIRE(byext.code == 0);
    REQUIRE(lines_of(byext.out)[0] == "Dhc tight delta=2 Delta=2 alpha=2 mu=2 lhs=4 rhs=4");

    auto byflag = run_cmd("printf '4 3\\n0 1\\n0 2\\n0 3\\n' | " + egk_bin() +
                          " extremal - --format edgelist");
    REQUIRE(byflag.code == 0);
    REQUIRE(lines_of(byflag.out)[0].find("tight biregular") != std::string::npos);

    // a graph6 payload forced through the edge-list parser must fail cleanly
    auto wrong = run_cmd("printf 'Dhc\\n' | " + egk_bin() + " check - --format edgelist");
    REQUIRE(wrong.code == 1);
}
