#pragma once

// JSON documents for verdicts and certificates.
//
// One document per graph, always the same five fields:
//   {"schema_version":"egk/1","input":<graph6>,"verdict":...,
//    "quantities":{...},"certificate":{...}}
//
// verdict is one of "tight", "strict", "oracle-only", "not-applicable".
// quantities holds delta/Delta/alpha/mu/lhs/rhs; unknown entries are null.
// certificate is a tagged object; "kind" selects the payload:
//   none | biregular | special | bubble | witness | trace
//
// Serialization is deterministic: field order is fixed and dump() emits a
// single line, so equal documents are byte-identical. Parsing validates
// shape and vertex ids against the graph decoded from "input".

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "egk/bubble.hpp"
#include "egk/graph.hpp"
#include "egk/graph6.hpp"
#include "egk/matching.hpp"
#include "egk/recognize.hpp"

namespace egk {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "egk/1";

struct Quantities {
    std::optional<int> delta, Delta, alpha, mu;
    std::optional<long long> lhs, rhs;
};

namespace detail {

template <typename T>
Json opt_json(const std::optional<T>& v) {
    if (v) return Json(*v);
    return Json(nullptr);
}

inline Json edge_json(const Edge& e) { return Json::array({e.first, e.second}); }

inline Json edges_json(const std::vector<Edge>& edges) {
    Json a = Json::array();
    for (const auto& e : edges) a.push_back(edge_json(e));
    return a;
}

}  // namespace detail

inline Json quantities_json(const Quantities& q) {
    Json j = Json::object();
    j["delta"] = detail::opt_json(q.delta);
    j["Delta"] = detail::opt_json(q.Delta);
    j["alpha"] = detail::opt_json(q.alpha);
    j["mu"] = detail::opt_json(q.mu);
    j["lhs"] = detail::opt_json(q.lhs);
    j["rhs"] = detail::opt_json(q.rhs);
    return j;
}

inline Json certificate_none(const std::string& reason) {
    Json j = Json::object();
    j["kind"] = "none";
    j["reason"] = reason;
    return j;
}

inline Json certificate_json(const BiregularCertificate& c) {
    Json j = Json::object();
    j["kind"] = "biregular";
    j["low_degree"] = c.low_degree;
    j["high_degree"] = c.high_degree;
    j["low_side"] = c.low_side;
    j["high_side"] = c.high_side;
    return j;
}

inline Json certificate_json(const BubbleCertificate& c) {
    Json j = Json::object();
    j["kind"] = "bubble";
    j["contact"] = c.contact;
    j["set_i"] = c.set_i;
    j["set_r"] = c.set_r;
    j["edge_xy"] = detail::edge_json(c.edge_xy);
    return j;
}

inline Json certificate_json(const WitnessPair& w) {
    Json j = Json::object();
    j["kind"] = "witness";
    j["independent"] = w.independent;
    j["matching"] = detail::edges_json(w.matching.edges);
    return j;
}

inline Json certificate_json(const std::vector<SpecialDecomposition>& components) {
    Json comps = Json::array();
    for (const auto& d : components) {
        Json bubbles = Json::array();
        for (const auto& b : d.bubbles) {
            Json jb = Json::object();
            jb["vertices"] = b.vertices;
            jb["contact"] = b.contact;
            jb["anchor"] = b.anchor;
            jb["set_i"] = b.set_i;
            jb["set_r"] = b.set_r;
            jb["edge_xy"] = detail::edge_json(b.edge_xy);
            bubbles.push_back(std::move(jb));
        }
        Json jd = Json::object();
        jd["core"] = d.core;
        jd["core_i"] = d.core_i;
        jd["core_r"] = d.core_r;
        jd["bubbles"] = std::move(bubbles);
        comps.push_back(std::move(jd));
    }
    Json j = Json::object();
    j["kind"] = "special";
    j["components"] = std::move(comps);
    return j;
}

inline Json certificate_json(const ProofTrace& t) {
    Json j = Json::object();
    j["kind"] = "trace";
    j["independent"] = t.independent;
    j["rest"] = t.rest;
    j["h_edges"] = detail::edges_json(t.h.edges());
    j["h_matching"] = detail::edges_json(t.h_matching.edges);
    j["h_cover"] = t.h_cover.vertices;
    j["k"] = t.k;
    j["cross"] = t.cross;
    j["min_degree"] = t.min_degree;
    j["max_degree"] = t.max_degree;
    j["alpha"] = t.alpha;
    j["mu_h"] = t.mu_h;
    j["mu_g"] = t.mu_g;
    j["chain_low"] = Json::array({t.chain_low[0], t.chain_low[1], t.chain_low[2], t.chain_low[3]});
    j["chain_main"] =
        Json::array({t.chain_main[0], t.chain_main[1], t.chain_main[2], t.chain_main[3]});
    return j;
}

struct CertificateDocument {
    std::string input;    // graph6 form of the graph the document describes
    std::string verdict;  // tight | strict | oracle-only | not-applicable
    Quantities quantities;
    Json certificate = certificate_none("");
};

inline Json document_json(const CertificateDocument& d) {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["input"] = d.input;
    j["verdict"] = d.verdict;
    j["quantities"] = quantities_json(d.quantities);
    j["certificate"] = d.certificate;
    return j;
}

inline std::string document_line(const CertificateDocument& d) { return document_json(d).dump(); }

// ---------------------------------------------------------------------------
// Parsing with validation. Every reader throws std::invalid_argument with a
// specific message; malformed JSON surfaces as nlohmann's own exceptions
// (also derived from std::exception).

namespace detail {

inline const Json& require_field(const Json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(std::string(where) + ": missing field \"" + key + "\"");
    return *it;
}

inline int int_from_json(const Json& j, const char* where) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(where) + ": expected an integer");
    return j.get<int>();
}

inline std::optional<int> opt_int_from_json(const Json& j, const char* where) {
    if (j.is_null()) return std::nullopt;
    return int_from_json(j, where);
}

inline std::optional<long long> opt_ll_from_json(const Json& j, const char* where) {
    if (j.is_null()) return std::nullopt;
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(where) + ": expected an integer");
    return j.get<long long>();
}

inline int vertex_from_json(const Json& j, int n, const char* where) {
    int v = int_from_json(j, where);
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(where) + ": vertex id " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n) + ")");
    return v;
}

inline VertexList vertex_list_from_json(const Json& j, int n, const char* where) {
    if (!j.is_array()) throw std::invalid_argument(std::string(where) + ": expected an array");
    VertexList out;
    for (const auto& x : j) out.push_back(vertex_from_json(x, n, where));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument(std::string(where) + ": duplicate vertex id");
    return out;
}

inline Edge edge_from_json(const Json& j, int n, const char* where) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument(std::string(where) + ": expected a two-element array");
    int u = vertex_from_json(j[0], n, where);
    int v = vertex_from_json(j[1], n, where);
    if (u == v) throw std::invalid_argument(std::string(where) + ": loop edge");
    return {std::min(u, v), std::max(u, v)};
}

inline std::vector<Edge> edges_from_json(const Json& j, int n, const char* where) {
    if (!j.is_array()) throw std::invalid_argument(std::string(where) + ": expected an array");
    std::vector<Edge> out;
    for (const auto& x : j) out.push_back(edge_from_json(x, n, where));
    return out;
}

}  // namespace detail

inline BiregularCertificate biregular_from_json(const Json& j, const Graph& g) {
    const int n = g.vertex_count();
    BiregularCertificate c;
    c.low_degree = detail::int_from_json(detail::require_field(j, "low_degree", "biregular"),
                                         "biregular.low_degree");
    c.high_degree = detail::int_from_json(detail::require_field(j, "high_degree", "biregular"),
                                          "biregular.high_degree");
    c.low_side =
        detail::vertex_list_from_json(detail::require_field(j, "low_side", "biregular"), n,
                                      "biregular.low_side");
    c.high_side =
        detail::vertex_list_from_json(detail::require_field(j, "high_side", "biregular"), n,
                                      "biregular.high_side");
    return c;
}

inline BubbleCertificate bubble_from_json(const Json& j, const Graph& g) {
    const int n = g.vertex_count();
    BubbleCertificate c;
    c.contact =
        detail::vertex_from_json(detail::require_field(j, "contact", "bubble"), n, "bubble.contact");
    c.set_i = detail::vertex_list_from_json(detail::require_field(j, "set_i", "bubble"), n,
                                            "bubble.set_i");
    c.set_r = detail::vertex_list_from_json(detail::require_field(j, "set_r", "bubble"), n,
                                            "bubble.set_r");
    c.edge_xy =
        detail::edge_from_json(detail::require_field(j, "edge_xy", "bubble"), n, "bubble.edge_xy");
    return c;
}

inline WitnessPair witness_from_json(const Json& j, const Graph& g) {
    const int n = g.vertex_count();
    WitnessPair w;
    w.independent = detail::vertex_list_from_json(detail::require_field(j, "independent", "witness"),
                                                  n, "witness.independent");
    w.matching.edges =
        detail::edges_from_json(detail::require_field(j, "matching", "witness"), n,
                                "witness.matching");
    return w;
}

inline std::vector<SpecialDecomposition> specials_from_json(const Json& j, const Graph& g) {
    const int n = g.vertex_count();
    const Json& comps = detail::require_field(j, "components", "special");
    if (!comps.is_array()) throw std::invalid_argument("special.components: expected an array");
    std::vector<SpecialDecomposition> out;
    for (const auto& jc : comps) {
        SpecialDecomposition d;
        d.core = detail::vertex_list_from_json(detail::require_field(jc, "core", "special"), n,
                                               "special.core");
        d.core_i = detail::vertex_list_from_json(detail::require_field(jc, "core_i", "special"), n,
                                                 "special.core_i");
        d.core_r = detail::vertex_list_from_json(detail::require_field(jc, "core_r", "special"), n,
                                                 "special.core_r");
        const Json& jb = detail::require_field(jc, "bubbles", "special");
        if (!jb.is_array()) throw std::invalid_argument("special.bubbles: expected an array");
        for (const auto& b : jb) {
            SpecialBubble sb;
            sb.vertices = detail::vertex_list_from_json(
                detail::require_field(b, "vertices", "special bubble"), n, "special bubble.vertices");
            sb.contact = detail::vertex_from_json(
                detail::require_field(b, "contact", "special bubble"), n, "special bubble.contact");
            sb.anchor = detail::vertex_from_json(detail::require_field(b, "anchor", "special bubble"),
                                                 n, "special bubble.anchor");
            sb.set_i = detail::vertex_list_from_json(
                detail::require_field(b, "set_i", "special bubble"), n, "special bubble.set_i");
            sb.set_r = detail::vertex_list_from_json(
                detail::require_field(b, "set_r", "special bubble"), n, "special bubble.set_r");
            sb.edge_xy = detail::edge_from_json(
                detail::require_field(b, "edge_xy", "special bubble"), n, "special bubble.edge_xy");
            d.bubbles.push_back(std::move(sb));
        }
        out.push_back(std::move(d));
    }
    return out;
}

inline ProofTrace trace_from_json(const Json& j, const Graph& g) {
    const int n = g.vertex_count();
    ProofTrace t;
    t.independent = detail::vertex_list_from_json(detail::require_field(j, "independent", "trace"),
                                                  n, "trace.independent");
    t.rest =
        detail::vertex_list_from_json(detail::require_field(j, "rest", "trace"), n, "trace.rest");
    t.h = Graph::from_edges(
        n, detail::edges_from_json(detail::require_field(j, "h_edges", "trace"), n, "trace.h_edges"));
    t.h_matching.edges = detail::edges_from_json(detail::require_field(j, "h_matching", "trace"), n,
                                                 "trace.h_matching");
    t.h_cover.vertices = detail::vertex_list_from_json(
        detail::require_field(j, "h_cover", "trace"), n, "trace.h_cover");
    t.k = detail::int_from_json(detail::require_field(j, "k", "trace"), "trace.k");
    t.cross = detail::require_field(j, "cross", "trace").get<long long>();
    t.min_degree =
        detail::int_from_json(detail::require_field(j, "min_degree", "trace"), "trace.min_degree");
    t.max_degree =
        detail::int_from_json(detail::require_field(j, "max_degree", "trace"), "trace.max_degree");
    t.alpha = detail::int_from_json(detail::require_field(j, "alpha", "trace"), "trace.alpha");
    t.mu_h = detail::int_from_json(detail::require_field(j, "mu_h", "trace"), "trace.mu_h");
    t.mu_g = detail::int_from_json(detail::require_field(j, "mu_g", "trace"), "trace.mu_g");
    for (const char* key : {"chain_low", "chain_main"}) {
        const Json& a = detail::require_field(j, key, "trace");
        if (!a.is_array() || a.size() != 4)
            throw std::invalid_argument(std::string("trace.") + key +
                                        ": expected a four-element array");
        for (int i = 0; i < 4; ++i) {
            long long v = a[static_cast<std::size_t>(i)].get<long long>();
            (std::string(key) == "chain_low" ? t.chain_low : t.chain_main)[i] = v;
        }
    }
    return t;
}

struct ParsedDocument {
    Graph graph;  // decoded from "input"
    std::string verdict;
    Quantities quantities;
    Json certificate;
};

inline ParsedDocument parse_document(const std::string& text) {
    Json j = Json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("document: expected a JSON object");
    const Json& schema = detail::require_field(j, "schema_version", "document");
    if (!schema.is_string() || schema.get<std::string>() != kSchemaVersion)
        throw std::invalid_argument("document: unsupported schema_version");
    const Json& input = detail::require_field(j, "input", "document");
    if (!input.is_string()) throw std::invalid_argument("document.input: expected a string");
    ParsedDocument out{parse_graph6(input.get<std::string>()), {}, {}, Json::object()};

    const Json& verdict = detail::require_field(j, "verdict", "document");
    if (!verdict.is_string()) throw std::invalid_argument("document.verdict: expected a string");
    out.verdict = verdict.get<std::string>();
    if (out.verdict != "tight" && out.verdict != "strict" && out.verdict != "oracle-only" &&
        out.verdict != "not-applicable")
        throw std::invalid_argument("document.verdict: unknown verdict \"" + out.verdict + "\"");

    const Json& q = detail::require_field(j, "quantities", "document");
    if (!q.is_object()) throw std::invalid_argument("document.quantities: expected an object");
    out.quantities.delta =
        detail::opt_int_from_json(detail::require_field(q, "delta", "quantities"), "quantities.delta");
    out.quantities.Delta =
        detail::opt_int_from_json(detail::require_field(q, "Delta", "quantities"), "quantities.Delta");
    out.quantities.alpha =
        detail::opt_int_from_json(detail::require_field(q, "alpha", "quantities"), "quantities.alpha");
    out.quantities.mu =
        detail::opt_int_from_json(detail::require_field(q, "mu", "quantities"), "quantities.mu");
    out.quantities.lhs =
        detail::opt_ll_from_json(detail::require_field(q, "lhs", "quantities"), "quantities.lhs");
    out.quantities.rhs =
        detail::opt_ll_from_json(detail::require_field(q, "rhs", "quantities"), "quantities.rhs");

    out.certificate = detail::require_field(j, "certificate", "document");
    if (!out.certificate.is_object())
        throw std::invalid_argument("document.certificate: expected an object");
    const Json& kind = detail::require_field(out.certificate, "kind", "certificate");
    if (!kind.is_string()) throw std::invalid_argument("certificate.kind: expected a string");
    const std::string k = kind.get<std::string>();
    if (k != "none" && k != "biregular" && k != "special" && k != "bubble" && k != "witness" &&
        k != "trace")
        throw std::invalid_argument("certificate.kind: unknown kind \"" + k + "\"");
    return out;
}

// Re-checks a certificate payload against the graph it claims to describe.
// The payload is taken from JSON (not from the structures that produced
// it), so a round trip through this function exercises the full parse and
// verify path. Returns human-readable problems; empty means verified.
inline std::vector<std::string> verify_certificate_json(const Graph& g, const Json& cert) {
    std::vector<std::string> problems;
    const std::string kind =
        detail::require_field(cert, "kind", "certificate").get<std::string>();
    if (kind == "none") return problems;
    if (kind == "biregular") {
        if (!verify_biregular(g, biregular_from_json(cert, g)))
            problems.push_back("biregular certificate does not verify");
        return problems;
    }
    if (kind == "bubble") {
        if (!is_bubble_certificate(g, bubble_from_json(cert, g)))
            problems.push_back("bubble certificate does not verify");
        return problems;
    }
    if (kind == "witness") {
        if (!verify_witness_pair(g, witness_from_json(cert, g)))
            problems.push_back("witness pair does not verify");
        return problems;
    }
    if (kind == "trace") {
        if (!verify_trace(g, trace_from_json(cert, g)))
            problems.push_back("proof trace does not verify");
        return problems;
    }
    if (kind == "special") {
        auto components = specials_from_json(cert, g);
        auto actual = connected_components(g);
        if (components.size() != actual.size()) {
            problems.push_back("special certificate covers " +
                               std::to_string(components.size()) + " components, graph has " +
                               std::to_string(actual.size()));
            return problems;
        }
        for (std::size_t i = 0; i < components.size(); ++i) {
            const auto& d = components[i];
            VertexList claimed = d.core;
            for (const auto& b : d.bubbles)
                claimed.insert(claimed.end(), b.vertices.begin(), b.vertices.end());
            std::sort(claimed.begin(), claimed.end());
            if (claimed != actual[i]) {
                problems.push_back("component " + std::to_string(i) +
                                   ": claimed vertex set does not match the component");
                continue;
            }
            auto sub = induced_subgraph(g, actual[i]);
            SpecialDecomposition local;
            auto remap_list = [&sub](const VertexList& xs) {
                VertexList ys;
                for (int v : xs) ys.push_back(sub.to_new[static_cast<std::size_t>(v)]);
                std::sort(ys.begin(), ys.end());
                return ys;
            };
            local.core = remap_list(d.core);
            local.core_i = remap_list(d.core_i);
            local.core_r = remap_list(d.core_r);
            for (const auto& b : d.bubbles) {
                SpecialBubble lb;
                lb.vertices = remap_list(b.vertices);
                lb.contact = sub.to_new[static_cast<std::size_t>(b.contact)];
                lb.anchor = sub.to_new[static_cast<std::size_t>(b.anchor)];
                lb.set_i = remap_list(b.set_i);
                lb.set_r = remap_list(b.set_r);
                lb.edge_xy = {sub.to_new[static_cast<std::size_t>(b.edge_xy.first)],
                              sub.to_new[static_cast<std::size_t>(b.edge_xy.second)]};
                if (lb.edge_xy.first > lb.edge_xy.second)
                    std::swap(lb.edge_xy.first, lb.edge_xy.second);
                local.bubbles.push_back(std::move(lb));
            }
            for (const auto& v : verify_special(sub.graph, local))
                problems.push_back("component " + std::to_string(i) + ": " + v);
        }
        return problems;
    }
    problems.push_back("unknown certificate kind \"" + kind + "\"");
    return problems;
}

}  // namespace egk
