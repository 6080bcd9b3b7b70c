#include "blg/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace blg {

using nlohmann::json;

namespace {

json blg_json(const BiLabeledGraph& h) {
    json j;
    j["n"] = h.graph.n();
    json edges = json::array();
    json loops = json::array();
    for (auto [u, v] : h.graph.edges()) {
        if (u == v)
            loops.push_back(u);
        else
            edges.push_back(json::array({u, v}));
    }
    j["edges"] = std::move(edges);
    j["loops"] = std::move(loops);
    j["out"] = h.out;
    j["in"] = h.in;
    return j;
}

BiLabeledGraph blg_parse(const json& j) {
    BiLabeledGraph h;
    h.graph = Graph(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad edge entry");
        h.graph.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("loops"))
        for (const auto& v : j.at("loops")) h.graph.add_edge(v.get<int>(), v.get<int>());
    if (j.contains("out")) h.out = j.at("out").get<std::vector<int>>();
    if (j.contains("in")) h.in = j.at("in").get<std::vector<int>>();
    h.validate();
    return h;
}

}  // namespace

std::string blg_to_json(const BiLabeledGraph& h) { return blg_json(h).dump(); }

BiLabeledGraph blg_from_json(const std::string& text) {
    return blg_parse(json::parse(text));
}

std::string matrix_to_json(const HomMatrix& m) {
    json j;
    j["n"] = m.n;
    j["l"] = m.l;
    j["k"] = m.k;
    json entries = json::array();
    for (const BigInt& x : m.e) entries.push_back(x.str());
    j["entries"] = std::move(entries);
    return j.dump();
}

HomMatrix matrix_from_json(const std::string& text) {
    json j = json::parse(text);
    HomMatrix m(j.at("n").get<int>(), j.at("l").get<int>(), j.at("k").get<int>());
    const auto& entries = j.at("entries");
    if (entries.size() != m.e.size()) throw std::invalid_argument("matrix entry count mismatch");
    for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = BigInt(entries[i].get<std::string>());
    return m;
}

std::string partition_to_json(const RefinementPartition& p) {
    json j;
    j["size"] = p.size;
    j["classes"] = p.classes;
    return j.dump();
}

RefinementPartition partition_from_json(const std::string& text) {
    json j = json::parse(text);
    RefinementPartition p;
    p.size = j.at("size").get<int>();
    p.classes = j.at("classes").get<std::vector<std::vector<int>>>();
    p.normalize();
    return p;
}

std::string report_to_json(const FourColorReport& r) {
    json j;
    j["size_bound"] = r.size_bound;
    j["all_pass"] = r.all_pass();
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    return j.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

BiLabeledGraph load_blg(const std::string& path) {
    std::string text = read_file(path);
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') return blg_from_json(text);
    return {parse_graph_text(text), {}, {}};
}

Graph load_graph(const std::string& path) { return load_blg(path).graph; }

}  // namespace blg
