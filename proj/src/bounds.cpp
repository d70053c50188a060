#include "kalliance/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "kalliance/errors.hpp"
#include "kalliance/solver.hpp"
#include "kalliance/spectral.hpp"

namespace kalliance {

namespace {

constexpr double kRealEps = 1e-9;

int exact_or_throw(const Graph& g, Kind kind, int k, bool global, Objective obj,
                   std::optional<int>* out) {
    AllianceSpec spec{kind, k, global};
    InvariantResult r;
    switch (obj) {
        case Objective::min_alliance: r = min_alliance(g, spec); break;
        case Objective::max_free: r = max_free(g, spec); break;
        case Objective::min_cover: r = min_cover(g, spec); break;
    }
    if (r.feasible) {
        *out = *r.value;
        return *r.value;
    }
    out->reset();
    return 0;
}

BoundStatus classify_lower_int(int bound, const std::optional<int>& exact) {
    if (!exact.has_value()) return BoundStatus::holds_slack;  // family empty: min is +inf
    if (*exact < bound) return BoundStatus::violated;
    return *exact == bound ? BoundStatus::holds_tight : BoundStatus::holds_slack;
}

BoundStatus classify_upper_int(int bound, int exact) {
    if (exact > bound) return BoundStatus::violated;
    return exact == bound ? BoundStatus::holds_tight : BoundStatus::holds_slack;
}

BoundStatus classify_lower_real(double bound, int exact) {
    if (exact < bound - kRealEps) return BoundStatus::violated;
    return std::abs(exact - bound) <= kRealEps ? BoundStatus::holds_tight
                                               : BoundStatus::holds_slack;
}

BoundStatus classify_upper_real(double bound, int exact) {
    if (exact > bound + kRealEps) return BoundStatus::violated;
    return std::abs(exact - bound) <= kRealEps ? BoundStatus::holds_tight
                                               : BoundStatus::holds_slack;
}

}  // namespace

const char* bound_id_name(BoundId id) {
    switch (id) {
        case BoundId::B1: return "B1";
        case BoundId::B2_lower: return "B2.lower";
        case BoundId::B2_upper: return "B2.upper";
        case BoundId::B3_lower: return "B3.lower";
        case BoundId::B3_upper: return "B3.upper";
        case BoundId::B4: return "B4";
        case BoundId::B5: return "B5";
        case BoundId::B6: return "B6";
        case BoundId::B7: return "B7";
    }
    throw std::logic_error("unreachable bound id");
}

std::vector<BoundId> all_bound_ids() {
    return {BoundId::B1, BoundId::B2_lower, BoundId::B2_upper, BoundId::B3_lower,
            BoundId::B3_upper, BoundId::B4, BoundId::B5, BoundId::B6, BoundId::B7};
}

const char* bound_status_name(BoundStatus s) {
    switch (s) {
        case BoundStatus::holds_tight: return "holds-tight";
        case BoundStatus::holds_slack: return "holds-slack";
        case BoundStatus::premise_unmet: return "premise-unmet";
        case BoundStatus::violated: return "VIOLATED";
    }
    throw std::logic_error("unreachable bound status");
}

int floor_div(int a, int b) {
    int q = a / b;
    int r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

BoundEvaluation evaluate_bound(const Graph& g, int k, BoundId id) {
    const int n = g.n();
    const int D = g.max_degree();
    const int d = g.min_degree();
    if (k < -D || k > D)
        throw std::invalid_argument("bounds: k outside {-Delta..Delta}");

    BoundEvaluation ev;
    ev.id = id;
    ev.n = n;
    ev.m = g.m();
    ev.delta = d;
    ev.Delta = D;
    ev.k = k;
    if (n >= 2) {
        SpectralSummary sp = laplacian_spectrum(g);
        ev.mu = snap_to_int(sp.mu);
        ev.mu_star = snap_to_int(sp.mu_star);
    }
    const bool conn = g.connected();

    auto premise_fail = [&](const std::string& note) {
        ev.premises_met = false;
        ev.premise_note = note;
        ev.status = BoundStatus::premise_unmet;
    };
    auto lower_int = [&](int b) {
        ev.bound_value = static_cast<double>(b);
        ev.bound_integral = true;
        if (ev.premises_met) ev.status = classify_lower_int(b, ev.exact_value);
    };
    auto upper_int = [&](int b) {
        ev.bound_value = static_cast<double>(b);
        ev.bound_integral = true;
        if (ev.premises_met) ev.status = classify_upper_int(b, *ev.exact_value);
    };
    ev.premises_met = true;

    switch (id) {
        case BoundId::B1: {
            if (!(0 <= k && k <= D)) premise_fail("requires 0 <= k <= Delta");
            exact_or_throw(g, Kind::offensive, k, true, Objective::max_free, &ev.exact_value);
            lower_int(n / 2 + floor_div(k, 2) - 1);
            break;
        }
        case BoundId::B2_lower: {
            exact_or_throw(g, Kind::offensive, k, false, Objective::max_free, &ev.exact_value);
            lower_int(ceil_div(d + k - 2, 2));
            break;
        }
        case BoundId::B2_upper: {
            if (!(k >= 1 - D)) premise_fail("requires k >= 1-Delta");
            exact_or_throw(g, Kind::offensive, k, false, Objective::max_free, &ev.exact_value);
            upper_int(floor_div(2 * n - d + k - 3, 2));
            break;
        }
        case BoundId::B3_lower: {
            exact_or_throw(g, Kind::defensive, k, false, Objective::max_free, &ev.exact_value);
            if (!(conn && n >= 2)) {
                premise_fail("requires a connected graph with n >= 2");
                break;
            }
            double mu = *ev.mu;
            double r = (n * (k + mu) - mu) / (n + mu);
            lower_int(static_cast<int>(std::ceil(snap_to_int(r))));
            break;
        }
        case BoundId::B3_upper: {
            if (!(conn && n >= 2)) premise_fail("requires a connected graph with n >= 2");
            exact_or_throw(g, Kind::defensive, k, false, Objective::max_free, &ev.exact_value);
            upper_int(floor_div(2 * n + k - d - 1, 2));
            break;
        }
        case BoundId::B4: {
            exact_or_throw(g, Kind::defensive, k, false, Objective::min_cover, &ev.exact_value);
            if (!(conn && n >= 2)) {
                premise_fail("requires a connected graph with n >= 2");
                break;
            }
            double ms = *ev.mu_star;
            double b = (n / ms) * (ms - ceil_div(d + k, 2));
            ev.bound_value = b;
            ev.bound_integral = false;
            ev.status = classify_upper_real(b, *ev.exact_value);
            break;
        }
        case BoundId::B5: {
            exact_or_throw(g, Kind::defensive, k, false, Objective::min_alliance,
                           &ev.exact_value);
            if (!(n >= 2)) {
                premise_fail("requires n >= 2");
                break;
            }
            double mu = *ev.mu;
            double r = n * (mu + k + 1) / (n + mu);
            lower_int(static_cast<int>(std::ceil(snap_to_int(r))));
            break;
        }
        case BoundId::B6: {
            exact_or_throw(g, Kind::offensive, k, true, Objective::min_alliance,
                           &ev.exact_value);
            if (!(n >= 2 && g.m() >= 1)) {
                premise_fail("requires n >= 2 and m >= 1");
                break;
            }
            double ms = *ev.mu_star;
            double b = (n / ms) * ceil_div(d + k, 2);
            ev.bound_value = b;
            ev.bound_integral = false;
            if (!ev.exact_value.has_value()) {
                ev.status = BoundStatus::holds_slack;
            } else {
                ev.status = classify_lower_real(b, *ev.exact_value);
            }
            break;
        }
        case BoundId::B7: {
            if (!(0 <= k && k <= D && conn)) premise_fail("requires 0 <= k <= Delta and a connected graph");
            exact_or_throw(g, Kind::defensive, k, false, Objective::max_free, &ev.exact_value);
            lower_int(n / 2 + floor_div(k, 2));
            break;
        }
    }
    return ev;
}

std::vector<BoundEvaluation> evaluate_bounds(const Graph& g, int k) {
    std::vector<BoundEvaluation> out;
    for (BoundId id : all_bound_ids()) out.push_back(evaluate_bound(g, k, id));
    return out;
}

std::optional<int> closed_form_complete(int n, int k, const std::string& invariant) {
    if (n < 1) throw std::invalid_argument("closed_form_complete: n must be >= 1");
    const int D = n - 1;
    if (k < -D || k > D)
        throw std::invalid_argument("closed_form_complete: k outside {-(n-1)..n-1}");

    const bool offensive_valid = k >= 2 - D;
    const bool parity_ok = !(n % 2 != 0 && (k % 2 != 0));  // not both n, k odd

    if (invariant == "phi_k" || invariant == "gamma_k^o") {
        if (invariant == "gamma_k^o" && !offensive_valid) return std::nullopt;
        return ceil_div(n + k - 1, 2);
    }
    if (invariant == "a_k") return ceil_div(n + k + 1, 2);
    if (invariant == "zeta_k") return ceil_div(n - k, 2);
    if (invariant == "phi_k^o") {
        if (!offensive_valid) return std::nullopt;
        return ceil_div(n + k - 3, 2);
    }
    if (invariant == "zeta_k^o") {
        if (!offensive_valid) return std::nullopt;
        return n - ceil_div(n + k - 3, 2);
    }
    if (invariant == "phi_k^go") {
        if (!offensive_valid || !parity_ok) return std::nullopt;
        return floor_div(n + k - 2, 2);
    }
    if (invariant == "zeta_k^go") {
        if (!offensive_valid || !parity_ok) return std::nullopt;
        return n - floor_div(n + k - 2, 2);
    }
    throw std::invalid_argument("closed_form_complete: unknown invariant " + invariant);
}

}  // namespace kalliance
