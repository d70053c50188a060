#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kalliance/graph.hpp"

namespace kalliance {

// Bound rows evaluated against exact invariant values.
//
//   B1       lower   phi_k^go >= floor(n/2) + floor(k/2) - 1        (0 <= k <= Delta)
//   B2.lower lower   phi_k^o  >= ceil((delta+k-2)/2)
//   B2.upper upper   phi_k^o  <= floor((2n-delta+k-3)/2)            (k >= 1-Delta)
//   B3.lower lower   phi_k    >= ceil((n(k+mu)-mu)/(n+mu))          (connected, n >= 2)
//   B3.upper upper   phi_k    <= floor((2n+k-delta-1)/2)            (connected, n >= 2)
//   B4       upper   zeta_k   <= (n/mu*)(mu* - ceil((delta+k)/2))   (connected, n >= 2; real-valued)
//   B5       lower   a_k      >= ceil(n(mu+k+1)/(n+mu))             (n >= 2)
//   B6       lower   gamma_k^o >= (n/mu*) ceil((delta+k)/2)         (n >= 2, m >= 1; real-valued)
//   B7       lower   phi_k    >= floor(n/2) + floor(k/2)            (0 <= k <= Delta, connected)
enum class BoundId {
    B1,
    B2_lower,
    B2_upper,
    B3_lower,
    B3_upper,
    B4,
    B5,
    B6,
    B7,
};

const char* bound_id_name(BoundId id);
std::vector<BoundId> all_bound_ids();

enum class BoundStatus {
    holds_tight,
    holds_slack,
    premise_unmet,
    violated,
};

const char* bound_status_name(BoundStatus s);

struct BoundEvaluation {
    BoundId id = BoundId::B1;
    bool premises_met = false;
    std::string premise_note;  // reason when premises fail, empty otherwise
    std::optional<double> bound_value;
    bool bound_integral = false;  // bound_value is an integer formula result
    std::optional<int> exact_value;  // nullopt: family empty (infeasible)
    BoundStatus status = BoundStatus::premise_unmet;
    // input snapshot for reproduction
    int n = 0;
    int m = 0;
    int delta = 0;
    int Delta = 0;
    int k = 0;
    std::optional<double> mu;
    std::optional<double> mu_star;
};

// Floor/ceiling division exact for negative operands (b > 0).
int floor_div(int a, int b);
int ceil_div(int a, int b);

// Evaluates one bound row; premise failure is a status, not an error.
// Throws std::invalid_argument for k outside {-Delta..Delta} and
// cap_error when the exact invariant is out of solver reach.
BoundEvaluation evaluate_bound(const Graph& g, int k, BoundId id);

// All nine rows for one k, in BoundId order.
std::vector<BoundEvaluation> evaluate_bounds(const Graph& g, int k);

// Closed-form invariant values on the complete graph K_n.
// Returns nullopt when the formula's validity premise fails:
// offensive forms need k >= 2-Delta = 3-n, and the global offensive
// free/cover forms additionally need n, k not both odd.
// Throws std::invalid_argument for n < 1 or k outside {-(n-1)..n-1},
// or an unknown invariant name.
std::optional<int> closed_form_complete(int n, int k, const std::string& invariant);

}  // namespace kalliance
