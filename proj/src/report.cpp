#include "kalliance/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "kalliance/alliance.hpp"

namespace kalliance {

namespace {

ordered_json witness_json(const std::optional<VertexSet>& w) {
    if (!w.has_value()) return nullptr;
    ordered_json arr = ordered_json::array();
    for (int v : w->to_vector()) arr.push_back(v);
    return arr;
}

std::string format_bound_value(const BoundEvaluation& ev) {
    if (!ev.bound_value.has_value()) return "";
    if (ev.bound_integral) return std::to_string(static_cast<long long>(*ev.bound_value));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", *ev.bound_value);
    return buf;
}

}  // namespace

ordered_json invariant_json(const InvariantResult& r, std::optional<double> elapsed_ms) {
    ordered_json j;
    j["invariant"] = r.invariant;
    j["k"] = r.spec.k;
    j["kind"] = kind_name(r.spec.kind);
    j["global"] = r.spec.global;
    if (r.feasible) j["value"] = *r.value;
    else j["value"] = nullptr;
    j["witness"] = r.feasible ? witness_json(r.witness) : ordered_json(nullptr);
    j["method"] = method_name(r.method);
    if (elapsed_ms.has_value()) j["elapsed_ms"] = *elapsed_ms;
    else j["elapsed_ms"] = nullptr;
    return j;
}

std::string invariant_human_line(const InvariantResult& r, const std::string& graph_label) {
    std::ostringstream os;
    os << r.invariant << '(' << graph_label << ")";
    if (!r.feasible) {
        os << " infeasible";
    } else {
        os << " = " << *r.value;
        if (r.witness.has_value()) os << "  witness " << r.witness->to_string();
    }
    os << "  [" << method_name(r.method) << ']';
    return os.str();
}

ordered_json bound_json(const BoundEvaluation& ev) {
    ordered_json j;
    j["bound_id"] = bound_id_name(ev.id);
    j["k"] = ev.k;
    j["premises_met"] = ev.premises_met;
    j["premise_note"] = ev.premise_note;
    if (!ev.bound_value.has_value()) j["bound_value"] = nullptr;
    else if (ev.bound_integral) j["bound_value"] = static_cast<long long>(*ev.bound_value);
    else j["bound_value"] = *ev.bound_value;
    if (ev.exact_value.has_value()) j["exact_value"] = *ev.exact_value;
    else j["exact_value"] = nullptr;
    j["status"] = bound_status_name(ev.status);
    j["n"] = ev.n;
    j["m"] = ev.m;
    j["delta"] = ev.delta;
    j["Delta"] = ev.Delta;
    if (ev.mu.has_value()) j["mu"] = *ev.mu;
    else j["mu"] = nullptr;
    if (ev.mu_star.has_value()) j["mu_star"] = *ev.mu_star;
    else j["mu_star"] = nullptr;
    return j;
}

std::string bound_csv_header() {
    return "bound_id,k,premises_met,premise_note,bound_value,exact_value,status,"
           "n,m,delta,Delta,mu,mu_star";
}

std::string bound_csv_row(const BoundEvaluation& ev) {
    std::ostringstream os;
    os << bound_id_name(ev.id) << ',' << ev.k << ','
       << (ev.premises_met ? "true" : "false") << ',' << ev.premise_note << ','
       << format_bound_value(ev) << ',';
    if (ev.exact_value.has_value()) os << *ev.exact_value;
    else os << "infeasible";
    os << ',' << bound_status_name(ev.status) << ',' << ev.n << ',' << ev.m << ','
       << ev.delta << ',' << ev.Delta << ',';
    char buf[64];
    if (ev.mu.has_value()) {
        std::snprintf(buf, sizeof buf, "%.12g", *ev.mu);
        os << buf;
    }
    os << ',';
    if (ev.mu_star.has_value()) {
        std::snprintf(buf, sizeof buf, "%.12g", *ev.mu_star);
        os << buf;
    }
    return os.str();
}

std::string bound_human_line(const BoundEvaluation& ev, const std::string& graph_label) {
    std::ostringstream os;
    os << bound_id_name(ev.id) << " on " << graph_label << " k=" << ev.k << ": "
       << bound_status_name(ev.status);
    if (ev.status == BoundStatus::premise_unmet) {
        os << " (" << ev.premise_note << ')';
        return os.str();
    }
    os << " (bound " << format_bound_value(ev) << ", exact ";
    if (ev.exact_value.has_value()) os << *ev.exact_value;
    else os << "infeasible";
    os << ')';
    return os.str();
}

ordered_json theorem_json(const TheoremReport& rep) {
    ordered_json j;
    j["theorem"] = rep.theorem;
    j["k"] = rep.k;
    j["instances"] = rep.instances;
    j["verified"] = rep.verified;
    j["status"] = theorem_status_name(rep.status);
    j["detail"] = rep.detail;
    if (rep.counterexample.has_value()) {
        ordered_json arr = ordered_json::array();
        for (int v : *rep.counterexample) arr.push_back(v);
        j["counterexample"] = arr;
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

ordered_json corpus_run_json(const CorpusRunReport& rep) {
    ordered_json j;
    ordered_json rows = ordered_json::array();
    for (const auto& agg : rep.per_theorem) {
        ordered_json r;
        r["theorem"] = agg.theorem;
        r["runs"] = agg.runs;
        r["instances"] = agg.instances;
        r["verified"] = agg.verified;
        r["vacuous_runs"] = agg.vacuous_runs;
        r["skipped_runs"] = agg.skipped_runs;
        r["counterexamples"] = agg.counterexamples;
        rows.push_back(r);
    }
    j["theorems"] = rows;
    ordered_json fails = ordered_json::array();
    for (const auto& f : rep.failures) {
        ordered_json r;
        r["theorem"] = f.theorem;
        r["graph"] = f.graph;
        r["k"] = f.k;
        r["detail"] = f.detail;
        fails.push_back(r);
    }
    j["failures"] = fails;
    j["total_instances"] = rep.total_instances;
    j["total_counterexamples"] = rep.total_counterexamples;
    if (rep.wall_ms.has_value()) j["wall_ms"] = *rep.wall_ms;
    else j["wall_ms"] = nullptr;
    j["ok"] = rep.ok;
    return j;
}

}  // namespace kalliance
