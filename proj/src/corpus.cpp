#include "kalliance/corpus.hpp"

#include <algorithm>
#include <filesystem>

#include "kalliance/errors.hpp"
#include "kalliance/generators.hpp"
#include "kalliance/graph_io.hpp"

namespace kalliance {

std::vector<CorpusEntry> default_corpus() {
    std::vector<CorpusEntry> out;
    for (int n = 3; n <= 6; ++n) out.push_back({"K_" + std::to_string(n), make_complete(n)});
    for (int n = 4; n <= 8; ++n) out.push_back({"C_" + std::to_string(n), make_cycle(n)});
    for (int n = 4; n <= 6; ++n) out.push_back({"P_" + std::to_string(n), make_path(n)});
    for (int l = 3; l <= 5; ++l) out.push_back({"star:" + std::to_string(l), make_star(l)});
    out.push_back({"c8-chords", make_c8_chords()});
    const char* ps[3] = {"0.3", "0.5", "0.7"};
    const double pv[3] = {0.3, 0.5, 0.7};
    for (int s = 1; s <= 20; ++s) {
        int i = s % 3;
        out.push_back({"G(8," + std::string(ps[i]) + ",s" + std::to_string(s) + ")",
                       make_random(8, pv[i], uint32_t(s))});
    }
    return out;
}

std::vector<CorpusEntry> corpus_from_dir(const std::string& path) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(path)) throw parse_error("corpus: not a directory: " + path);
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(path))
        if (e.is_regular_file()) files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw parse_error("corpus: no files in " + path);
    std::vector<CorpusEntry> out;
    for (const std::string& f : files)
        out.push_back({fs::path(f).filename().string(), load_graph(f)});
    return out;
}

} // namespace kalliance
