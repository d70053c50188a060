#include "kalliance/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kalliance/errors.hpp"

namespace kalliance {

namespace {

constexpr int kVerifierCap = 10;

// Subset-bitmask view of a small graph; all checks below run on raw
// masks so they are independent of the VertexSet predicate code path.
struct MaskGraph {
    int n = 0;
    uint32_t full = 0;
    std::vector<uint32_t> adj;
    std::vector<int> deg;
    int delta = 0;
    int Delta = 0;

    explicit MaskGraph(const Graph& g)
        : n(g.n()), full((1u << g.n()) - 1), adj(g.n(), 0), deg(g.n(), 0) {
        for (const auto& [u, v] : g.edges()) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
        for (int v = 0; v < n; ++v) deg[v] = std::popcount(adj[v]);
        delta = n > 0 ? *std::min_element(deg.begin(), deg.end()) : 0;
        Delta = n > 0 ? *std::max_element(deg.begin(), deg.end()) : 0;
    }
};

int pc(uint32_t x) { return std::popcount(x); }

uint32_t boundary_mask(const MaskGraph& g, uint32_t S) {
    uint32_t out = 0;
    for (uint32_t t = S; t; t &= t - 1) out |= g.adj[std::countr_zero(t)];
    return out & ~S;
}

bool dominating_mask(const MaskGraph& g, uint32_t S) {
    for (uint32_t t = g.full & ~S; t; t &= t - 1)
        if (!(g.adj[std::countr_zero(t)] & S)) return false;
    return true;
}

bool alliance_mask(const MaskGraph& g, uint32_t S, char kind, int k, bool glob) {
    if (glob && !dominating_mask(g, S)) return false;
    uint32_t members = kind == 'd' ? S : boundary_mask(g, S);
    for (uint32_t t = members; t; t &= t - 1) {
        int v = std::countr_zero(t);
        if (2 * pc(g.adj[v] & S) < g.deg[v] + k) return false;
    }
    return true;
}

// global boundary offensive k-alliance: dominating and every outside
// vertex meets the offensive condition with equality.
bool gbo_mask(const MaskGraph& g, uint32_t S, int k) {
    if (!dominating_mask(g, S)) return false;
    for (uint32_t t = g.full & ~S; t; t &= t - 1) {
        int v = std::countr_zero(t);
        if (pc(g.adj[v] & S) != pc(g.adj[v] & ~S & g.full) + k) return false;
    }
    return true;
}

// Alliance list plus a subset-contains table ("does X contain some
// alliance"), built by subset-sum DP.
struct Family {
    std::vector<uint32_t> A;
    std::vector<uint8_t> has;
    uint32_t full;

    Family(const MaskGraph& g, char kind, int k, bool glob)
        : has(size_t{1} << g.n, 0), full(g.full) {
        for (uint32_t S = 1; S <= g.full && g.n > 0; ++S)
            if (alliance_mask(g, S, kind, k, glob)) {
                A.push_back(S);
                has[S] = 1;
            }
        for (int b = 0; b < g.n; ++b) {
            uint32_t bit = 1u << b;
            for (uint32_t X = 0; X <= g.full; ++X)
                if ((X & bit) && has[X ^ bit]) has[X] = 1;
        }
    }
    bool free_set(uint32_t X) const { return !has[X]; }
    bool cover(uint32_t X) const { return !has[full & ~X]; }
    bool minimal_cover(uint32_t X) const {
        if (!cover(X)) return false;
        for (uint32_t t = X; t; t &= t - 1)
            if (cover(X ^ (t & -t))) return false;
        return true;
    }
    bool maximal_free(uint32_t X) const {
        if (free_set(X)) {
            for (uint32_t t = full & ~X; t; t &= t - 1)
                if (free_set(X | (t & -t))) return false;
            return true;
        }
        return false;
    }
};

std::vector<int> mask_vertices(uint32_t X) {
    std::vector<int> out;
    for (uint32_t t = X; t; t &= t - 1) out.push_back(std::countr_zero(t));
    return out;
}

std::string mask_str(uint32_t X) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : mask_vertices(X)) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

struct CheckOutcome {
    long long instances = 0;
    long long failed = 0;
    std::string first_fail;
    uint32_t first_fail_mask = 0;

    void record_fail(uint32_t X, const std::string& note) {
        if (failed == 0) {
            first_fail = note;
            first_fail_mask = X;
        }
        ++failed;
    }
};

CheckOutcome check_dom_goa(const MaskGraph& g, int k, bool goa) {
    CheckOutcome out;
    Family f(g, 'd', k, false);
    for (uint32_t X = 1; X <= g.full; ++X) {
        if (X == g.full || !f.minimal_cover(X)) continue;
        ++out.instances;
        uint32_t comp = g.full & ~X;
        bool ok = goa ? (comp && alliance_mask(g, comp, 'o', k, true))
                      : dominating_mask(g, comp);
        if (!ok) out.record_fail(X, "minimal cover X=" + mask_str(X));
    }
    return out;
}

CheckOutcome check_goac(const MaskGraph& g, int k) {
    CheckOutcome out;
    Family f(g, 'o', k, true);
    for (uint32_t X = 1; X <= g.full; ++X) {
        if (X == g.full || pc(X) < 2 || !f.minimal_cover(X)) continue;
        ++out.instances;
        uint32_t comp = g.full & ~X;
        bool ok = comp && alliance_mask(g, comp, 'o', k - 2, false);
        if (ok && 3 <= k && k <= g.Delta) ok = alliance_mask(g, comp, 'o', k - 2, true);
        if (!ok) out.record_fail(X, "minimal cover X=" + mask_str(X));
    }
    return out;
}

CheckOutcome check_13(const MaskGraph& g, int k) {
    CheckOutcome out;
    Family fd(g, 'd', 1 - k, false);
    Family fg(g, 'o', 1 - k, true);
    for (uint32_t X = 1; X <= g.full; ++X) {
        if (alliance_mask(g, X, 'o', k, true)) {
            ++out.instances;
            if (!fd.free_set(g.full & ~X)) out.record_fail(X, "(i) X=" + mask_str(X));
        }
        if (alliance_mask(g, X, 'd', k, false)) {
            ++out.instances;
            if (!fg.free_set(g.full & ~X)) out.record_fail(X, "(ii) X=" + mask_str(X));
        }
    }
    return out;
}

CheckOutcome check_rem1(const MaskGraph& g, int k) {
    CheckOutcome out;
    for (char kind : {'d', 'o'}) {
        Family f(g, kind, k, false);
        for (uint32_t X = 1; X <= g.full; ++X) {
            if (!f.minimal_cover(X)) continue;
            ++out.instances;
            bool ok = true;
            for (uint32_t t = X; ok && t; t &= t - 1) {
                uint32_t bv = t & -t;
                bool found = false;
                for (uint32_t a : f.A)
                    if ((a & X) == bv) {
                        found = true;
                        break;
                    }
                ok = found;
            }
            if (!ok)
                out.record_fail(X, std::string("(i) kind=") + kind + " X=" + mask_str(X));
        }
        for (uint32_t X = 0; X <= g.full; ++X) {
            if (!f.maximal_free(X)) continue;
            ++out.instances;
            bool ok = true;
            for (uint32_t t = g.full & ~X; ok && t; t &= t - 1) {
                uint32_t bv = t & -t;
                bool found = false;
                for (uint32_t a : f.A)
                    if ((a & bv) && (a & ~(X | bv)) == 0) {
                        found = true;
                        break;
                    }
                ok = found;
            }
            if (!ok)
                out.record_fail(X, std::string("(ii) kind=") + kind + " X=" + mask_str(X));
        }
        if (g.n == 0) break;
    }
    return out;
}

CheckOutcome check_ext_daf(const MaskGraph& g, int k) {
    CheckOutcome out;
    Family f1(g, 'd', k, false);
    Family f2(g, 'd', k + 2, false);
    for (uint32_t X = 0; X <= g.full; ++X) {
        if (!f1.free_set(X)) continue;
        for (uint32_t t = g.full & ~X; t; t &= t - 1) {
            uint32_t bv = t & -t;
            ++out.instances;
            if (!f2.free_set(X | bv))
                out.record_fail(X, "X=" + mask_str(X) + " v=" +
                                       std::to_string(std::countr_zero(bv)));
        }
    }
    return out;
}

CheckOutcome check_ext_goaf(const MaskGraph& g, int k) {
    CheckOutcome out;
    Family f1(g, 'o', k, true);
    Family f2(g, 'o', k + 2, true);
    for (uint32_t X = 0; X <= g.full; ++X) {
        if (pc(X) > g.n - 2 || !f1.free_set(X)) continue;
        ++out.instances;
        bool found = false;
        for (uint32_t t = g.full & ~X; t; t &= t - 1)
            if (f2.free_set(X | (t & -t))) {
                found = true;
                break;
            }
        if (!found) out.record_fail(X, "X=" + mask_str(X));
    }
    return out;
}

CheckOutcome check_oac2(const MaskGraph& g, int k) {
    CheckOutcome out;
    Family f(g, 'o', k, false);
    for (uint32_t X = 1; X <= g.full; ++X) {
        if (!f.minimal_cover(X)) continue;
        ++out.instances;
        if (pc(X) < 2) out.record_fail(X, "X=" + mask_str(X));
    }
    return out;
}

CheckOutcome check_front(const MaskGraph& g) {
    CheckOutcome out;
    Family f(g, 'o', 0, true);
    for (uint32_t X = 1; X < g.full; ++X) {
        uint32_t Y = g.full & ~X;
        if (X > Y) continue;  // unordered partition, enumerate once
        if (!gbo_mask(g, X, 0) || !gbo_mask(g, Y, 0)) continue;
        ++out.instances;
        for (uint32_t Z : {X, Y}) {
            bool member = std::find(f.A.begin(), f.A.end(), Z) != f.A.end();
            bool minimal = member;
            if (member)
                for (uint32_t a : f.A)
                    if (a != Z && (a & ~Z) == 0) {
                        minimal = false;
                        break;
                    }
            if (!minimal) out.record_fail(X, "partition side Z=" + mask_str(Z));
        }
    }
    return out;
}

CheckOutcome check_table(const MaskGraph& g, int k) {
    CheckOutcome out;
    const int d = g.delta, D = g.Delta;
    if (1 - d <= k && k <= D) {
        Family f(g, 'd', k, false);
        for (uint32_t X = 0; X <= g.full; ++X) {
            if (!f.maximal_free(X)) continue;
            out.instances += 2;
            if (!dominating_mask(g, X)) out.record_fail(X, "R1 X=" + mask_str(X));
            if (!(X && alliance_mask(g, X, 'o', k, true)))
                out.record_fail(X, "R2 X=" + mask_str(X));
        }
    }
    if (1 - D <= k && k <= D - 1) {
        Family f(g, 'd', 1 - k, false);
        for (uint32_t X = 1; X <= g.full; ++X) {
            if (!alliance_mask(g, X, 'o', k, true)) continue;
            ++out.instances;
            if (!f.cover(X)) out.record_fail(X, "R3 X=" + mask_str(X));
        }
    }
    if (1 - d <= k && k <= D - 1) {
        Family f(g, 'd', k, false);
        Family f2(g, 'd', 1 - k, false);
        for (uint32_t X = 1; X <= g.full; ++X) {
            if (X == g.full || !f.minimal_cover(X)) continue;
            ++out.instances;
            if (!f2.free_set(X)) out.record_fail(X, "R4 X=" + mask_str(X));
        }
    }
    if (3 <= k && k <= D) {
        Family f(g, 'o', k, true);
        Family f2(g, 'd', 3 - k, false);
        for (uint32_t X = 1; X <= g.full; ++X) {
            if (X == g.full || pc(X) < 2 || !f.minimal_cover(X)) continue;
            ++out.instances;
            if (!f2.free_set(X)) out.record_fail(X, "R5 X=" + mask_str(X));
        }
    }
    return out;
}

CheckOutcome check_oac_counter(const MaskGraph& g) {
    CheckOutcome out;
    const uint32_t S = 0b01110110;  // {1,2,4,5,6}
    Family f(g, 'o', 0, false);
    ++out.instances;
    bool ok = f.cover(S) && f.minimal_cover(S) && !dominating_mask(g, g.full & ~S);
    if (!ok) out.record_fail(S, "S=" + mask_str(S));
    return out;
}

CheckOutcome check_dual(const MaskGraph& g, int k) {
    CheckOutcome out;
    struct Fam3 {
        char kind;
        bool glob;
    };
    for (Fam3 fg : {Fam3{'d', false}, Fam3{'o', false}, Fam3{'o', true}}) {
        Family f(g, fg.kind, k, fg.glob);
        for (uint32_t X = 0; X <= g.full; ++X) {
            ++out.instances;
            bool direct = true;  // every alliance meets X, by raw list scan
            for (uint32_t a : f.A)
                if (!(a & X)) {
                    direct = false;
                    break;
                }
            if (direct != f.free_set(g.full & ~X))
                out.record_fail(X, std::string("kind=") + fg.kind +
                                       (fg.glob ? " global" : "") + " X=" + mask_str(X));
            if (g.full == 0) break;
        }
    }
    return out;
}

}  // namespace

const char* theorem_status_name(TheoremStatus s) {
    switch (s) {
        case TheoremStatus::ok: return "ok";
        case TheoremStatus::vacuous: return "vacuous";
        case TheoremStatus::skipped: return "skipped";
        case TheoremStatus::counterexample: return "counterexample";
    }
    throw std::logic_error("unreachable theorem status");
}

std::vector<std::string> all_theorem_ids() {
    return {"T-dual", "T-rem1", "T-dom",      "T-goa",     "T-goac",  "T-13",
            "T-table", "T-ext-goaf", "T-ext-daf", "T-oac2", "T-front", "T-oac-counter"};
}

std::optional<std::pair<int, int>> theorem_k_range(const Graph& g,
                                                   const std::string& id) {
    const int D = g.max_degree(), d = g.min_degree();
    std::pair<int, int> r;
    if (id == "T-dual" || id == "T-rem1" || id == "T-table") r = {-D, D};
    else if (id == "T-dom" || id == "T-goa") r = {1 - d, D};
    else if (id == "T-goac") r = {2 - D, D};
    else if (id == "T-13") r = {1 - D, D - 1};
    else if (id == "T-ext-goaf") r = {1, D - 2};
    else if (id == "T-ext-daf") r = {std::max(-D, -d - 1), D - 2};
    else if (id == "T-oac2") r = {-D, d};
    else if (id == "T-front" || id == "T-oac-counter") r = {0, 0};
    else throw std::invalid_argument("unknown theorem id: " + id);
    if (r.first > r.second) return std::nullopt;
    return r;
}

TheoremReport verify(const Graph& g, const std::string& theorem_id, int k) {
    auto range = theorem_k_range(g, theorem_id);  // validates the id
    if (g.n() > kVerifierCap)
        throw cap_error("verifier: enumeration cap is n <= 10, got n = " +
                        std::to_string(g.n()));

    TheoremReport rep;
    rep.theorem = theorem_id;
    rep.k = k;
    if (!range || k < range->first || k > range->second) {
        rep.status = TheoremStatus::skipped;
        rep.detail = "k outside the stated premise range";
        return rep;
    }
    MaskGraph mg(g);
    if (theorem_id == "T-oac-counter" && g.n() < 7) {
        rep.status = TheoremStatus::skipped;
        rep.detail = "fixed instance requires n >= 7";
        return rep;
    }

    CheckOutcome out;
    if (theorem_id == "T-dual") out = check_dual(mg, k);
    else if (theorem_id == "T-rem1") out = check_rem1(mg, k);
    else if (theorem_id == "T-dom") out = check_dom_goa(mg, k, false);
    else if (theorem_id == "T-goa") out = check_dom_goa(mg, k, true);
    else if (theorem_id == "T-goac") out = check_goac(mg, k);
    else if (theorem_id == "T-13") out = check_13(mg, k);
    else if (theorem_id == "T-table") out = check_table(mg, k);
    else if (theorem_id == "T-ext-goaf") out = check_ext_goaf(mg, k);
    else if (theorem_id == "T-ext-daf") out = check_ext_daf(mg, k);
    else if (theorem_id == "T-oac2") out = check_oac2(mg, k);
    else if (theorem_id == "T-front") out = check_front(mg);
    else out = check_oac_counter(mg);

    rep.instances = out.instances;
    rep.verified = out.instances - out.failed;
    if (out.failed > 0) {
        rep.status = TheoremStatus::counterexample;
        rep.detail = out.first_fail;
        rep.counterexample = mask_vertices(out.first_fail_mask);
    } else if (out.instances == 0) {
        rep.status = TheoremStatus::vacuous;
        rep.detail = "no premise-satisfying instance";
    } else {
        rep.status = TheoremStatus::ok;
    }
    return rep;
}

CorpusRunReport corpus_run(const std::vector<CorpusEntry>& corpus,
                           const std::vector<std::string>& theorems,
                           std::optional<std::pair<int, int>> k_range, int threads,
                           bool timing) {
    auto t0 = std::chrono::steady_clock::now();

    struct TaskResult {
        long long runs = 0, instances = 0, verified = 0;
        long long vacuous = 0, skipped = 0, counterexamples = 0;
        std::vector<TheoremFailure> failures;
    };
    struct Task {
        size_t theorem_idx;
        size_t corpus_idx;
    };
    std::vector<Task> tasks;
    for (size_t t = 0; t < theorems.size(); ++t) {
        theorem_k_range(corpus.empty() ? Graph(1, {}) : corpus.front().graph,
                        theorems[t]);  // reject unknown ids up front
        for (size_t c = 0; c < corpus.size(); ++c) tasks.push_back({t, c});
    }
    std::vector<TaskResult> results(tasks.size());

    auto run_task = [&](size_t idx) {
        const Task& task = tasks[idx];
        const std::string& thm = theorems[task.theorem_idx];
        const CorpusEntry& entry = corpus[task.corpus_idx];
        TaskResult& res = results[idx];
        if (thm == "T-oac-counter" && entry.name != "c8-chords") {
            ++res.skipped;
            return;
        }
        auto stated = theorem_k_range(entry.graph, thm);
        if (!stated) return;
        int lo = stated->first, hi = stated->second;
        if (k_range) {
            int rlo = std::max(lo, k_range->first), rhi = std::min(hi, k_range->second);
            // requested ks outside the stated range are reported, not silent
            long long requested = static_cast<long long>(k_range->second) - k_range->first + 1;
            long long usable = rlo <= rhi ? static_cast<long long>(rhi) - rlo + 1 : 0;
            res.skipped += requested - usable;
            lo = rlo;
            hi = rhi;
        }
        for (int k = lo; k <= hi; ++k) {
            TheoremReport rep = verify(entry.graph, thm, k);
            ++res.runs;
            res.instances += rep.instances;
            res.verified += rep.verified;
            if (rep.status == TheoremStatus::vacuous) ++res.vacuous;
            if (rep.status == TheoremStatus::skipped) ++res.skipped;
            if (rep.status == TheoremStatus::counterexample) {
                ++res.counterexamples;
                res.failures.push_back({thm, entry.name, k, rep.detail});
            }
        }
    };

    int nthreads = std::max(1, threads);
    if (nthreads == 1 || tasks.size() <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::atomic<size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        int spawn = std::min<size_t>(nthreads, tasks.size());
        for (int t = 0; t < spawn; ++t)
            pool.emplace_back([&] {
                try {
                    for (size_t i = next.fetch_add(1); i < tasks.size();
                         i = next.fetch_add(1))
                        run_task(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    next.store(tasks.size());  // drain remaining work
                }
            });
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    CorpusRunReport rep;
    for (size_t t = 0; t < theorems.size(); ++t) {
        TheoremAggregate agg;
        agg.theorem = theorems[t];
        rep.per_theorem.push_back(agg);
    }
    for (size_t i = 0; i < tasks.size(); ++i) {
        TheoremAggregate& agg = rep.per_theorem[tasks[i].theorem_idx];
        const TaskResult& res = results[i];
        agg.runs += res.runs;
        agg.instances += res.instances;
        agg.verified += res.verified;
        agg.vacuous_runs += res.vacuous;
        agg.skipped_runs += res.skipped;
        agg.counterexamples += res.counterexamples;
        rep.total_instances += res.instances;
        rep.total_counterexamples += res.counterexamples;
        for (const auto& f : res.failures) rep.failures.push_back(f);
    }
    rep.ok = rep.total_counterexamples == 0;
    if (timing) {
        auto t1 = std::chrono::steady_clock::now();
        rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    return rep;
}

}  // namespace kalliance
