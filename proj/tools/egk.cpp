// egk: command-line front end for the product bound
//     min_degree * independence_number <= max_degree * matching_number
// and its tightness certificates.
//
// Subcommands:
//   check     compute the six quantities and report tight/strict
//   extremal  decide tightness structurally and emit a certificate
//   bubble    recognize a single bubble and emit its certificate
//   witness   emit an equal-size independent-set/matching pair
//   trace     emit the full inequality chain for one graph
//   oracle    exact alpha and mu by independent exhaustive methods
//   generate  seeded families: biregular, cubic, special, bubble
//
// Input is graph6 (one graph per line) or an edge list (one graph per
// file); output is one line per graph, or one JSON document per graph
// with --json. Every certificate is serialized, parsed back, and
// re-verified against the graph before it is printed.
//
// Exit codes: 0 all graphs verified/tight; 3 some graph strict or
// unrecognized; 4 some graph admits no structural decision; 1 usage,
// parse, or size-limit errors; 2 internal inconsistency. Higher-numbered
// conditions in the order 2, 1, 4, 3 take precedence.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "egk/bubble.hpp"
#include "egk/edgelist.hpp"
#include "egk/exact.hpp"
#include "egk/generate.hpp"
#include "egk/graph.hpp"
#include "egk/graph6.hpp"
#include "egk/json_io.hpp"
#include "egk/matching.hpp"
#include "egk/recognize.hpp"

namespace {

using namespace egk;

// ---------------------------------------------------------------------------
// input handling

enum class Format { graph6, edgelist };

std::string read_all(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open input file: " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

Format pick_format(const std::string& path, const std::string& requested) {
    if (requested == "graph6") return Format::graph6;
    if (requested == "edgelist") return Format::edgelist;
    auto ends_with = [&path](const char* suf) {
        std::string s(suf);
        return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".el")) return Format::edgelist;
    return Format::graph6;  // .g6, stdin, anything else
}

std::vector<std::string> split_items(const std::string& content, Format f) {
    if (f == Format::edgelist) return {content};
    std::vector<std::string> items;
    std::istringstream in(content);
    std::string line;
    const std::string header = ">>graph6<<";
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(header, 0) == 0) line.erase(0, header.size());
        if (!line.empty()) items.push_back(line);
    }
    return items;
}

Graph parse_item(const std::string& item, Format f) {
    return f == Format::edgelist ? parse_edge_list(item) : parse_graph6(item);
}

// ---------------------------------------------------------------------------
// per-graph results and the exit-code lattice

struct ItemResult {
    std::string text;   // human-readable line
    std::string json;   // JSON document line
    int code = 0;       // 0 ok/tight, 3 strict/unrecognized, 4 undecidable, 1 input, 2 internal
    std::string error;  // stderr message when code is 1 or 2
};

int severity_rank(int code) {
    switch (code) {
        case 0: return 0;
        case 3: return 1;
        case 4: return 2;
        case 1: return 3;
        default: return 4;  // 2: internal inconsistency dominates everything
    }
}

int combined_exit(const std::vector<ItemResult>& results) {
    int worst = 0;
    for (const auto& r : results)
        if (severity_rank(r.code) > severity_rank(worst)) worst = r.code;
    return worst;
}

template <typename Fn>
std::vector<ItemResult> run_items(const std::vector<std::string>& items, Format f, int jobs,
                                  Fn handle) {
    std::vector<ItemResult> out(items.size());
    auto work_one = [&](std::size_t i) {
        try {
            Graph g = parse_item(items[i], f);
            out[i] = handle(g);
        } catch (const OracleScaleError& e) {
            out[i] = ItemResult{{}, {}, 1, e.what()};
        } catch (const ParseError& e) {
            out[i] = ItemResult{{}, {}, 1, e.what()};
        } catch (const std::invalid_argument& e) {
            out[i] = ItemResult{{}, {}, 1, e.what()};
        } catch (const std::exception& e) {
            out[i] = ItemResult{{}, {}, 2, e.what()};
        }
    };
    const int threads = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), items.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) work_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1))
                    work_one(i);
            });
        for (auto& t : pool) t.join();
    }
    return out;
}

int emit(const std::vector<ItemResult>& results, bool json) {
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        if (r.code == 1 || r.code == 2) {
            std::cerr << "egk: item " << i << ": " << r.error << "\n";
            continue;
        }
        std::cout << (json ? r.json : r.text) << "\n";
    }
    return combined_exit(results);
}

// ---------------------------------------------------------------------------
// shared document plumbing

// Serialize, parse back, and verify a certificate against the graph it
// describes. Emitting anything that fails this round trip would be an
// internal inconsistency, reported as such via the exit code.
void require_verified(const Graph& g, const Json& cert) {
    auto problems = verify_certificate_json(g, Json::parse(cert.dump()));
    if (!problems.empty())
        throw std::logic_error("certificate failed re-verification: " + problems[0]);
}

CertificateDocument make_doc(const Graph& g, std::string verdict, const Quantities& q, Json cert) {
    return CertificateDocument{serialize_graph6(g), std::move(verdict), q, std::move(cert)};
}

// delta/Delta/mu are always computed; alpha only within the oracle cap.
Quantities fill_quantities(const Graph& g, int max_oracle, std::optional<int> alpha,
                           std::optional<int> mu) {
    auto prof = degree_profile(g);
    Quantities q;
    q.delta = prof.min_degree;
    q.Delta = prof.max_degree;
    if (!mu) mu = matching_number(g);
    if (!alpha && g.vertex_count() <= max_oracle) alpha = independence_number(g, max_oracle);
    q.alpha = alpha;
    q.mu = mu;
    if (q.alpha) q.lhs = static_cast<long long>(*q.delta) * *q.alpha;
    if (q.mu) q.rhs = static_cast<long long>(*q.Delta) * *q.mu;
    return q;
}

std::string quantities_text(const Quantities& q) {
    auto s = [](const auto& o) { return o ? std::to_string(*o) : std::string("?"); };
    return "delta=" + s(q.delta) + " Delta=" + s(q.Delta) + " alpha=" + s(q.alpha) +
           " mu=" + s(q.mu) + " lhs=" + s(q.lhs) + " rhs=" + s(q.rhs);
}

// ---------------------------------------------------------------------------
// subcommand handlers (one graph in, one result out)

struct IoOptions {
    std::string input = "-";
    std::string format = "auto";
    bool json = false;
    int jobs = 1;
    int max_oracle = 40;
};

ItemResult handle_check(const Graph& g, const IoOptions& io) {
    auto rep = check_inequality(g, io.max_oracle);
    Quantities q{rep.min_degree, rep.max_degree, rep.alpha, rep.mu, rep.lhs, rep.rhs};
    const std::string verdict = rep.tight ? "tight" : "strict";
    auto doc = make_doc(g, verdict, q, certificate_none("quantities only"));
    ItemResult r;
    r.json = document_line(doc);
    r.text = doc.input + " " + verdict + " " + quantities_text(q);
    r.code = rep.tight ? 0 : 3;
    return r;
}

ItemResult handle_extremal(const Graph& g, const IoOptions& io) {
    ExtremalResult res = is_extremal(g);
    ItemResult r;
    if (res.verdict == Verdict::tight) {
        Json cert;
        std::string how;
        if (res.biregular) {
            cert = certificate_json(*res.biregular);
            how = "biregular low_side=" + std::to_string(res.biregular->low_side.size()) + "x" +
                  std::to_string(res.biregular->low_degree) +
                  " high_side=" + std::to_string(res.biregular->high_side.size()) + "x" +
                  std::to_string(res.biregular->high_degree);
        } else if (!res.specials.empty()) {
            cert = certificate_json(res.specials);
            std::size_t bubbles = 0;
            for (const auto& d : res.specials) bubbles += d.bubbles.size();
            how = "special components=" + std::to_string(res.specials.size()) +
                  " bubbles=" + std::to_string(bubbles);
        } else {
            cert = certificate_json(*res.witnesses);
            how = "witness |I|=" + std::to_string(res.witnesses->independent.size()) +
                  " |M|=" + std::to_string(res.witnesses->matching.size());
        }
        require_verified(g, cert);
        Quantities q = fill_quantities(g, io.max_oracle, res.alpha, res.mu);
        auto doc = make_doc(g, "tight", q, std::move(cert));
        r.json = document_line(doc);
        r.text = doc.input + " tight " + how;
        r.code = 0;
    } else if (res.verdict == Verdict::strict) {
        Quantities q = fill_quantities(g, io.max_oracle, res.alpha, res.mu);
        auto doc = make_doc(g, "strict", q, certificate_none(res.reason));
        r.json = document_line(doc);
        r.text = doc.input + " strict: " + res.reason;
        r.code = 3;
    } else {
        Quantities q = fill_quantities(g, io.max_oracle, std::nullopt, std::nullopt);
        auto doc = make_doc(g, "oracle-only", q, certificate_none(res.reason));
        r.json = document_line(doc);
        r.text = doc.input + " oracle-only: " + res.reason;
        r.code = 4;
    }
    return r;
}

ItemResult handle_bubble(const Graph& g, const IoOptions& io) {
    ItemResult r;
    auto cert = recognize_bubble(g);
    if (cert) {
        Json jc = certificate_json(*cert);
        require_verified(g, jc);
        const int a = (g.vertex_count() - 1) / 2;
        if (matching_number(g) != a)
            throw std::logic_error("bubble matching size does not match (n-1)/2");
        if (g.vertex_count() <= io.max_oracle && independence_number(g, io.max_oracle) != a)
            throw std::logic_error("bubble independence number does not match (n-1)/2");
        Quantities q{2, 3, a, a, 2LL * a, 3LL * a};
        auto doc = make_doc(g, "strict", q, std::move(jc));  // bubbles are never tight
        r.json = document_line(doc);
        r.text = doc.input + " bubble contact=" + std::to_string(cert->contact) +
                 " alpha=mu=" + std::to_string(a);
        r.code = 0;
    } else {
        auto prof = degree_profile(g);
        Quantities q;
        q.delta = prof.min_degree;
        q.Delta = prof.max_degree;
        auto doc = make_doc(g, "not-applicable", q, certificate_none("graph is not a bubble"));
        r.json = document_line(doc);
        r.text = doc.input + " not-applicable: graph is not a bubble";
        r.code = 3;
    }
    return r;
}

ItemResult handle_witness(const Graph& g, const IoOptions& io) {
    ExtremalResult res = is_extremal(g);
    ItemResult r;
    if (res.witnesses) {
        Json cert = certificate_json(*res.witnesses);
        require_verified(g, cert);
        const int a = static_cast<int>(res.witnesses->independent.size());
        const int m = res.witnesses->matching.size();
        auto prof = degree_profile(g);
        Quantities q{prof.min_degree, prof.max_degree, a, m,
                     static_cast<long long>(prof.min_degree) * a,
                     static_cast<long long>(prof.max_degree) * m};
        auto doc = make_doc(g, "tight", q, std::move(cert));
        r.json = document_line(doc);
        r.text = doc.input + " tight witness |I|=" + std::to_string(a) +
                 " |M|=" + std::to_string(m);
        r.code = 0;
    } else if (res.verdict == Verdict::strict) {
        Quantities q = fill_quantities(g, io.max_oracle, res.alpha, res.mu);
        auto doc = make_doc(g, "strict", q, certificate_none(res.reason));
        r.json = document_line(doc);
        r.text = doc.input + " strict: " + res.reason;
        r.code = 3;
    } else if (res.verdict == Verdict::tight) {
        // tight via the biregular route: min degree < max degree, so no
        // equal-size independent-set/matching pair can exist
        const std::string reason =
            "witness pairs apply to regular graphs of degree at most 3";
        Quantities q = fill_quantities(g, io.max_oracle, res.alpha, res.mu);
        auto doc = make_doc(g, "not-applicable", q, certificate_none(reason));
        r.json = document_line(doc);
        r.text = doc.input + " not-applicable: " + reason;
        r.code = 3;
    } else {
        Quantities q = fill_quantities(g, io.max_oracle, std::nullopt, std::nullopt);
        auto doc = make_doc(g, "oracle-only", q, certificate_none(res.reason));
        r.json = document_line(doc);
        r.text = doc.input + " oracle-only: " + res.reason;
        r.code = 4;
    }
    return r;
}

ItemResult handle_trace(const Graph& g, const IoOptions& io) {
    ProofTrace t = proof_trace(g, std::nullopt, io.max_oracle);
    Json cert = certificate_json(t);
    require_verified(g, cert);
    const bool tight = t.chain_main[0] == t.chain_main[3];
    Quantities q{t.min_degree, t.max_degree, t.alpha, t.mu_g, t.chain_main[0], t.chain_main[3]};
    auto doc = make_doc(g, tight ? "tight" : "strict", q, std::move(cert));
    ItemResult r;
    r.json = document_line(doc);
    auto chain = [](const long long (&c)[4]) {
        std::string s = "[";
        for (int i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string(c[i]);
        return s + "]";
    };
    r.text = doc.input + " " + doc.verdict + " k=" + std::to_string(t.k) +
             " cross=" + std::to_string(t.cross) + " chain_low=" + chain(t.chain_low) +
             " chain_main=" + chain(t.chain_main);
    r.code = tight ? 0 : 3;
    return r;
}

ItemResult handle_oracle(const Graph& g, const IoOptions& io) {
    const int n = g.vertex_count();
    auto ar = alpha_exact(g, io.max_oracle);
    const int mu = matching_number(g);
    if (n <= 18 && mu_exact(g, 18) != mu)
        throw std::logic_error("matching algorithms disagree");
    if (n <= 20 && alpha_by_enumeration(g, 20) != ar.size)
        throw std::logic_error("independence oracles disagree");
    auto prof = degree_profile(g);
    Quantities q{prof.min_degree, prof.max_degree, ar.size, mu,
                 static_cast<long long>(prof.min_degree) * ar.size,
                 static_cast<long long>(prof.max_degree) * mu};
    const bool tight = *q.lhs == *q.rhs;
    auto doc = make_doc(g, tight ? "tight" : "strict", q, certificate_none("oracle computation"));
    ItemResult r;
    r.json = document_line(doc);
    r.text = doc.input + " " + doc.verdict + " " + quantities_text(q);
    r.code = tight ? 0 : 3;
    return r;
}

template <typename Fn>
int run_graph_command(const IoOptions& io, Fn handle) {
    const Format f = pick_format(io.input, io.format);
    const auto items = split_items(read_all(io.input), f);
    if (items.empty()) {
        std::cerr << "egk: no graphs in input\n";
        return 1;
    }
    return emit(run_items(items, f, io.jobs, handle), io.json);
}

// ---------------------------------------------------------------------------
// generate

struct GenOptions {
    std::uint64_t seed = 0;
    int count = 1;
    bool json = false;
    int max_oracle = 40;
};

void emit_generated(const ItemResult& r, bool json) {
    std::cout << (json ? r.json : r.text) << "\n";
}

int run_generate_biregular(const GenOptions& gen, int low, int high, int scale) {
    for (int i = 0; i < gen.count; ++i) {
        Graph g = generate_biregular(low, high, scale, gen.seed + static_cast<std::uint64_t>(i));
        ItemResult r;
        r.text = serialize_graph6(g);
        if (gen.json) {
            auto out = recognize_biregular_extremal(g);
            if (!out.certificate)
                throw std::logic_error("generated biregular graph failed recognition: " +
                                       out.reason);
            Json cert = certificate_json(*out.certificate);
            require_verified(g, cert);
            const int a = static_cast<int>(out.certificate->low_side.size());
            const int m = static_cast<int>(out.certificate->high_side.size());
            Quantities q{low, high, a, m, static_cast<long long>(low) * a,
                         static_cast<long long>(high) * m};
            r.json = document_line(make_doc(g, "tight", q, std::move(cert)));
        }
        emit_generated(r, gen.json);
    }
    return 0;
}

int run_generate_cubic(const GenOptions& gen, int n, bool allow_disconnected) {
    for (int i = 0; i < gen.count; ++i) {
        Graph g = random_cubic(n, gen.seed + static_cast<std::uint64_t>(i), !allow_disconnected);
        ItemResult r;
        r.text = serialize_graph6(g);
        if (gen.json) {
            IoOptions io;
            io.max_oracle = gen.max_oracle;
            r = handle_extremal(g, io);
            r.text = serialize_graph6(g);
        }
        emit_generated(r, gen.json);
    }
    return 0;
}

int run_generate_special(const GenOptions& gen, int core_high, int bubbles,
                         const std::vector<int>& sizes) {
    for (int i = 0; i < gen.count; ++i) {
        ComposeSpec spec;
        spec.core_high = core_high;
        spec.ell = bubbles;
        spec.bubble_sizes = sizes;
        spec.seed = gen.seed + static_cast<std::uint64_t>(i);
        ComposedSpecial cs = compose_special(spec);
        ItemResult r;
        r.text = serialize_graph6(cs.graph);
        if (gen.json) {
            Json cert = certificate_json(std::vector<SpecialDecomposition>{cs.decomposition});
            require_verified(cs.graph, cert);
            WitnessPair w = build_witnesses(cs.graph, cs.decomposition);
            if (!verify_witness_pair(cs.graph, w))
                throw std::logic_error("composed graph has no verifying witness pair");
            const int a = static_cast<int>(w.independent.size());
            Quantities q{3, 3, a, w.matching.size(), 3LL * a, 3LL * w.matching.size()};
            r.json = document_line(make_doc(cs.graph, "tight", q, std::move(cert)));
        }
        emit_generated(r, gen.json);
    }
    return 0;
}

int run_generate_bubble(const GenOptions& gen, int size, const std::string& catalog,
                        bool allow_bridged) {
    auto emit_one = [&gen](const Graph& g, const BubbleCertificate& cert) {
        ItemResult r;
        r.text = serialize_graph6(g);
        if (gen.json) {
            Json jc = certificate_json(cert);
            require_verified(g, jc);
            const int a = (g.vertex_count() - 1) / 2;
            Quantities q{2, 3, a, a, 2LL * a, 3LL * a};
            r.json = document_line(make_doc(g, "strict", q, std::move(jc)));
        }
        emit_generated(r, gen.json);
    };
    if (!catalog.empty()) {
        BubbleExample e = bubble_catalog(catalog);
        emit_one(e.graph, e.cert);
        return 0;
    }
    for (int i = 0; i < gen.count; ++i) {
        BubbleExample e =
            random_bubble(size, gen.seed + static_cast<std::uint64_t>(i), !allow_bridged);
        emit_one(e.graph, e.cert);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Checks the product bound min-degree*independence-number <= "
        "max-degree*matching-number and certifies the graphs attaining it."};
    app.set_version_flag("--version", "egk 1.0.0");
    app.require_subcommand(1);

    IoOptions io;
    auto add_io = [&io](CLI::App* cmd) {
        cmd->add_option("input", io.input, "input file, or - for stdin")->capture_default_str();
        cmd->add_option("--format", io.format, "auto, graph6, or edgelist")
            ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
            ->capture_default_str();
        cmd->add_flag("--json", io.json, "one JSON document per graph");
        cmd->add_option("--jobs", io.jobs, "worker threads; output order is preserved")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--max-oracle", io.max_oracle,
                        "largest order for exact independence-number computations")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    int rc = 0;

    auto* cmd_check = app.add_subcommand(
        "check", "compute degree, independence, and matching quantities; report tight or strict");
    add_io(cmd_check);
    cmd_check->callback(
        [&] { rc = run_graph_command(io, [&](const Graph& g) { return handle_check(g, io); }); });

    auto* cmd_extremal = app.add_subcommand(
        "extremal", "decide tightness structurally and emit a verifiable certificate");
    add_io(cmd_extremal);
    cmd_extremal->callback([&] {
        rc = run_graph_command(io, [&](const Graph& g) { return handle_extremal(g, io); });
    });

    auto* cmd_bubble =
        app.add_subcommand("bubble", "recognize a bubble and emit its certificate");
    add_io(cmd_bubble);
    cmd_bubble->callback(
        [&] { rc = run_graph_command(io, [&](const Graph& g) { return handle_bubble(g, io); }); });

    auto* cmd_witness = app.add_subcommand(
        "witness", "emit an equal-size independent-set/matching pair for tight regular graphs");
    add_io(cmd_witness);
    cmd_witness->callback([&] {
        rc = run_graph_command(io, [&](const Graph& g) { return handle_witness(g, io); });
    });

    auto* cmd_trace = app.add_subcommand(
        "trace", "emit the full inequality chain through the bipartite subgraph");
    add_io(cmd_trace);
    cmd_trace->callback(
        [&] { rc = run_graph_command(io, [&](const Graph& g) { return handle_trace(g, io); }); });

    auto* cmd_oracle = app.add_subcommand(
        "oracle", "exact alpha and mu by exhaustive search with independent cross-checks");
    add_io(cmd_oracle);
    cmd_oracle->callback(
        [&] { rc = run_graph_command(io, [&](const Graph& g) { return handle_oracle(g, io); }); });

    auto* cmd_gen = app.add_subcommand("generate", "seeded graph families (graph6 to stdout)");
    cmd_gen->require_subcommand(1);
    GenOptions gen;
    auto add_gen = [&gen](CLI::App* cmd) {
        cmd->add_option("--seed", gen.seed, "base seed; graph i uses seed+i")
            ->capture_default_str();
        cmd->add_option("--count", gen.count, "number of graphs")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_flag("--json", gen.json, "one JSON document per graph");
        cmd->add_option("--max-oracle", gen.max_oracle,
                        "largest order for exact independence-number computations")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    auto* gen_bireg = cmd_gen->add_subcommand(
        "biregular", "connected bipartite graph, one side degree LOW, the other degree HIGH");
    int gb_low = 2, gb_high = 3, gb_scale = 0;
    gen_bireg->add_option("--low", gb_low, "degree of the independent side")
        ->required()
        ->check(CLI::PositiveNumber);
    gen_bireg->add_option("--high", gb_high, "degree of the other side")
        ->required()
        ->check(CLI::PositiveNumber);
    gen_bireg->add_option("--scale", gb_scale,
                          "size multiplier; at least gcd(low,high), which is the default");
    add_gen(gen_bireg);
    gen_bireg->callback([&] {
        const int scale = gb_scale > 0 ? gb_scale : std::gcd(gb_low, gb_high);
        rc = run_generate_biregular(gen, gb_low, gb_high, scale);
    });

    auto* gen_cubic = cmd_gen->add_subcommand("cubic", "random cubic graph on N vertices");
    int gc_n = 10;
    bool gc_allow_disconnected = false;
    gen_cubic->add_option("--n", gc_n, "order (even, at least 4)")->required();
    gen_cubic->add_flag("--allow-disconnected", gc_allow_disconnected,
                        "do not insist on connectivity");
    add_gen(gen_cubic);
    gen_cubic->callback([&] { rc = run_generate_cubic(gen, gc_n, gc_allow_disconnected); });

    auto* gen_special = cmd_gen->add_subcommand(
        "special", "tight cubic graph: bipartite core with bridged bubbles");
    int gs_core_high = 0, gs_bubbles = 3;
    std::vector<int> gs_sizes;
    gen_special->add_option("--core-high", gs_core_high,
                            "vertices on the fully saturated core side")
        ->capture_default_str();
    gen_special->add_option("--bubbles", gs_bubbles, "bubble count (multiple of 3)")
        ->capture_default_str();
    gen_special->add_option("--sizes", gs_sizes,
                            "comma-separated bubble orders (odd, >= 5); default all 5")
        ->delimiter(',');
    add_gen(gen_special);
    gen_special->callback(
        [&] { rc = run_generate_special(gen, gs_core_high, gs_bubbles, gs_sizes); });

    auto* gen_bubble = cmd_gen->add_subcommand("bubble", "random bubble on SIZE vertices");
    int gu_size = 9;
    std::string gu_catalog;
    bool gu_allow_bridged = false;
    gen_bubble->add_option("--size", gu_size, "order (odd, at least 5)")->capture_default_str();
    gen_bubble->add_option("--catalog", gu_catalog,
                           "emit a fixed example instead: b5, b7, b9, or b11")
        ->check(CLI::IsMember(bubble_catalog_ids()));
    gen_bubble->add_flag("--allow-bridged", gu_allow_bridged,
                         "permit bubbles that are not 2-connected");
    add_gen(gen_bubble);
    gen_bubble->callback(
        [&] { rc = run_generate_bubble(gen, gu_size, gu_catalog, gu_allow_bridged); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const OracleScaleError& e) {
        std::cerr << "egk: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "egk: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "egk: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "egk: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
