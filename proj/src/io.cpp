#include "chromapoly/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "json.hpp"

namespace chromapoly {

namespace {

using nlohmann::json;

bool numeric_label(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// numeric value order for nonnegative integers of any size: compare with
// leading zeros dropped, original text as the tiebreak
std::tuple<std::size_t, std::string, std::string> numeric_key(const std::string& s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    std::string stripped = s.substr(i);
    return {stripped.size(), stripped, s};
}

// '#' comments and blank lines removed; everything else must be a pair of
// whitespace-separated tokens
std::vector<std::pair<std::string, std::string>> read_token_pairs(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (!(ls >> b) || ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": expected exactly two vertex labels");
        out.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

std::vector<std::pair<int, int>> resolve(const std::vector<std::pair<std::string, std::string>>& raw,
                                         const std::map<std::string, int>& id) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : raw) {
        auto ia = id.find(a);
        auto ib = id.find(b);
        if (ia == id.end()) throw ParseError("unknown vertex label \"" + a + "\"");
        if (ib == id.end()) throw ParseError("unknown vertex label \"" + b + "\"");
        edges.emplace_back(ia->second, ib->second);
    }
    return edges;
}

}  // namespace

GraphFormat graph_format_from_name(const std::string& name) {
    if (name == "edgelist") return GraphFormat::edge_list;
    if (name == "dimacs") return GraphFormat::dimacs;
    throw std::invalid_argument("unknown graph format \"" + name + "\" (edgelist or dimacs)");
}

LoadedGraph parse_edge_list(std::istream& in) {
    auto raw = read_token_pairs(in);
    std::vector<std::string> labels;
    for (const auto& [a, b] : raw) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (std::all_of(labels.begin(), labels.end(), numeric_label))
        std::sort(labels.begin(), labels.end(),
                  [](const std::string& x, const std::string& y) { return numeric_key(x) < numeric_key(y); });
    std::map<std::string, int> id;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) id[labels[static_cast<std::size_t>(i)]] = i;
    auto edges = resolve(raw, id);
    // the constructor normalizes to lexicographic ranks; restore input order
    Graph g = Graph(static_cast<int>(labels.size()), edges).reordered(edges);
    return LoadedGraph{std::move(g), std::move(labels)};
}

LoadedGraph parse_dimacs(std::istream& in) {
    int n = -1;
    long long declared = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        const std::string at = "line " + std::to_string(lineno) + ": ";
        if (head == "c") continue;
        if (head == "p") {
            if (n >= 0) throw ParseError(at + "second problem line");
            std::string kind;
            if (!(ls >> kind >> n >> declared) || kind != "edge" || n < 0 || declared < 0)
                throw ParseError(at + "expected \"p edge <vertices> <edges>\"");
            continue;
        }
        if (head == "e") {
            if (n < 0) throw ParseError(at + "edge before the problem line");
            int u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError(at + "expected \"e <u> <v>\"");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(at + "vertex out of range 1.." + std::to_string(n));
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw ParseError(at + "unrecognized line type \"" + head + "\"");
    }
    if (n < 0) throw ParseError("missing problem line");
    if (static_cast<long long>(edges.size()) != declared)
        throw ParseError("declared " + std::to_string(declared) + " edges, found " +
                         std::to_string(edges.size()));
    std::vector<std::string> labels;
    for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    Graph g = Graph(n, edges).reordered(edges);
    return LoadedGraph{std::move(g), std::move(labels)};
}

LoadedGraph load_graph(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    return format == GraphFormat::edge_list ? parse_edge_list(in) : parse_dimacs(in);
}

LoadedGraph reorder_edges(const LoadedGraph& lg, std::istream& in) {
    std::map<std::string, int> id;
    for (int i = 0; i < static_cast<int>(lg.labels.size()); ++i)
        id[lg.labels[static_cast<std::size_t>(i)]] = i;
    return LoadedGraph{lg.graph.reordered(resolve(read_token_pairs(in), id)), lg.labels};
}

LoadedGraph demo_graph(const std::string& name) {
    const std::string usage = "demo names look like K5, C4, P3";
    if (name.size() < 2) throw std::invalid_argument(usage);
    const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) throw std::invalid_argument(usage);
        n = n * 10 + (name[i] - '0');
        if (n > kMaxVertices) throw std::invalid_argument("demo graphs stop at 64 vertices");
    }
    if (n < 1) throw std::invalid_argument(usage);
    std::vector<std::pair<int, int>> e;
    switch (kind) {
        case 'K':
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
            break;
        case 'C':
            if (n < 3) throw std::invalid_argument("cycles need at least three vertices");
            for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
            break;
        case 'P':
            for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
            break;
        default:
            throw std::invalid_argument(usage);
    }
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    return LoadedGraph{Graph(n, e), std::move(labels)};
}

std::string coefficient_list_text(const IntPolynomial& p) {
    std::ostringstream out;
    out << '[';
    for (int k = 0; k <= p.degree(); ++k) {
        if (k > 0) out << ", ";
        out << p.coeff(k);
    }
    out << ']';
    return out.str();
}

std::string polynomial_to_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coeff(k).str());
    return json{{"degree", p.degree()}, {"coefficients", coeffs}}.dump();
}

IntPolynomial polynomial_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        std::vector<BigInt> coeffs;
        for (const auto& c : j.at("coefficients")) coeffs.emplace_back(c.get<std::string>());
        IntPolynomial p(std::move(coeffs));
        if (p.degree() != j.at("degree").get<int>())
            throw ParseError("degree does not match the coefficients");
        return p;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {  // nlohmann errors, bad integer literals
        throw ParseError(std::string("bad polynomial JSON: ") + e.what());
    }
}

std::string xi_to_json(const XiPolynomial& x) {
    json coeffs = json::array();
    for (int k = 0; k <= x.max_power(); ++k) coeffs.push_back(x.coeff(k).str());
    return json{{"inv_q_coefficients", coeffs}}.dump();
}

XiPolynomial xi_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        std::vector<BigInt> coeffs;
        for (const auto& c : j.at("inv_q_coefficients")) coeffs.emplace_back(c.get<std::string>());
        return XiPolynomial(std::move(coeffs));
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad polymer-sum JSON: ") + e.what());
    }
}

std::string potts_to_json(const PottsParameters& p, double z) {
    return json{{"q", p.q}, {"beta", p.beta}, {"J", p.J}, {"Z", z}}.dump();
}

}  // namespace chromapoly
