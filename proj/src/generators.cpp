#include "kalliance/generators.hpp"

#include <random>

#include "kalliance/errors.hpp"

namespace kalliance {

Graph make_complete(int n) {
    if (n < 1) throw parse_error("complete: n >= 1 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, std::move(e));
}

Graph make_cycle(int n) {
    if (n < 3) throw parse_error("cycle: n >= 3 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, std::move(e));
}

Graph make_path(int n) {
    if (n < 1) throw parse_error("path: n >= 1 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

Graph make_star(int leaves) {
    if (leaves < 1) throw parse_error("star: leaves >= 1 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph(leaves + 1, std::move(e));
}

Graph make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw parse_error("grid: rows, cols >= 1 required");
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> e;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c)});
        }
    return Graph(rows * cols, std::move(e));
}

Graph make_random(int n, double p, uint32_t seed) {
    if (n < 1) throw parse_error("random: n >= 1 required");
    if (p < 0.0 || p > 1.0) throw parse_error("random: p in [0,1] required");
    std::mt19937 gen(seed);
    const uint64_t threshold = uint64_t(p * 4294967296.0);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uint64_t(gen()) < threshold) e.push_back({i, j});
    return Graph(n, std::move(e));
}

Graph make_c8_chords() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 8; ++i) e.push_back({i, (i + 1) % 8});
    e.push_back({0, 2});
    e.push_back({4, 6});
    return Graph(8, std::move(e));
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    std::vector<std::pair<int, int>> e;
    for (const Graph& g : parts) {
        for (auto [u, v] : g.edges()) e.push_back({u + n, v + n});
        n += g.n();
    }
    return Graph(n, std::move(e));
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

long parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw parse_error("");
        return v;
    } catch (...) {
        throw parse_error("generator: bad " + what + " '" + s + "'");
    }
}

double parse_real(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw parse_error("");
        return v;
    } catch (...) {
        throw parse_error("generator: bad " + what + " '" + s + "'");
    }
}

Graph generate_one(const std::string& spec) {
    if (spec == "c8-chords") return make_c8_chords();
    size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw parse_error("generator: unknown family '" + spec + "'");
    std::string family = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);
    if (family == "complete") return make_complete(int(parse_int(params, "n")));
    if (family == "cycle") return make_cycle(int(parse_int(params, "n")));
    if (family == "path") return make_path(int(parse_int(params, "n")));
    if (family == "star") return make_star(int(parse_int(params, "leaves")));
    if (family == "grid") {
        auto xs = split(params, 'x');
        if (xs.size() != 2) throw parse_error("generator: grid wants RxC, got '" + params + "'");
        return make_grid(int(parse_int(xs[0], "rows")), int(parse_int(xs[1], "cols")));
    }
    if (family == "random") {
        auto xs = split(params, ',');
        if (xs.size() != 3)
            throw parse_error("generator: random wants n,p,seed, got '" + params + "'");
        long seed = parse_int(xs[2], "seed");
        if (seed < 0 || seed > 0xFFFFFFFFL) throw parse_error("generator: seed out of range");
        return make_random(int(parse_int(xs[0], "n")), parse_real(xs[1], "p"), uint32_t(seed));
    }
    throw parse_error("generator: unknown family '" + family + "'");
}

} // namespace

Graph generate(const std::string& spec) {
    const std::string suffix = "-disjoint";
    if (spec.size() > suffix.size() &&
        spec.compare(spec.size() - suffix.size(), suffix.size(), suffix) == 0) {
        std::string body = spec.substr(0, spec.size() - suffix.size());
        // split on commas, then re-merge numeric continuation tokens (random:8,0.3,7)
        std::vector<std::string> specs;
        for (const std::string& tok : split(body, ',')) {
            if (!specs.empty() && tok.find(':') == std::string::npos && tok != "c8-chords")
                specs.back() += "," + tok;
            else
                specs.push_back(tok);
        }
        if (specs.empty()) throw parse_error("generator: empty disjoint union");
        std::vector<Graph> parts;
        for (const std::string& s : specs) parts.push_back(generate_one(s));
        return disjoint_union(parts);
    }
    return generate_one(spec);
}

} // namespace kalliance
