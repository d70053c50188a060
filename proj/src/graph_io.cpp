#include "kalliance/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "kalliance/errors.hpp"

namespace kalliance {

namespace {

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long m_declared = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m_declared))
                throw parse_error("dimacs: malformed p line: " + line);
            if (fmt != "edge" && fmt != "col")
                throw parse_error("dimacs: unsupported format '" + fmt + "'");
            continue;
        }
        if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw parse_error("dimacs: malformed e line: " + line);
            if (n < 0) throw parse_error("dimacs: e line before p line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw parse_error("dimacs: vertex out of range in: " + line);
            edges.push_back({u - 1, v - 1});
            continue;
        }
        throw parse_error("dimacs: unknown line tag '" + tag + "'");
    }
    if (n < 0) throw parse_error("dimacs: missing p line");
    if (m_declared >= 0 && long(edges.size()) != m_declared)
        throw parse_error("dimacs: p line declares " + std::to_string(m_declared) +
                          " edges, file has " + std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    bool first_content = true;
    std::vector<std::pair<int, int>> edges;
    int max_label = -1;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string a;
        if (!(ls >> a)) continue;
        if (first_content && a == "n") {
            first_content = false;
            long cnt;
            std::string rest;
            std::istringstream hs(line);
            if (!(hs >> a >> cnt) || (hs >> rest))
                throw parse_error("edge list: malformed header: " + line);
            if (cnt < 0) throw parse_error("edge list: negative vertex count");
            n = int(cnt);
            continue;
        }
        first_content = false;
        std::istringstream es(line);
        long u, v;
        std::string rest;
        if (!(es >> u >> v) || (es >> rest))
            throw parse_error("edge list: malformed edge line: " + line);
        if (u < 0 || v < 0) throw parse_error("edge list: negative vertex in: " + line);
        edges.push_back({int(u), int(v)});
        max_label = std::max({max_label, int(u), int(v)});
    }
    if (n < 0) {
        if (edges.empty()) throw parse_error("edge list: no edges and no 'n' header");
        n = max_label + 1;
    }
    return Graph(n, std::move(edges));
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c" || tag == "p" || tag == "e") return parse_dimacs(text);
        break;
    }
    return parse_edge_list(text);
}

Graph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_graph(buf.str());
}

} // namespace kalliance
