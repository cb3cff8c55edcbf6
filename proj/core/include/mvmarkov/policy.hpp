#ifndef MVMARKOV_POLICY_HPP
#define MVMARKOV_POLICY_HPP

#include <optional>
#include <set>
#include <string>

#include "mvmarkov/markov.hpp"
#include "mvmarkov/trace.hpp"

namespace mvmarkov {

/*
 * Primary/secondary partition of the view catalog. Immutable value type:
 * apply() returns a new state instead of mutating.
 */
struct TierState {
    ViewCatalog catalog;
    std::set<int> primary;
    std::set<int> secondary;
    int primary_capacity = 0;

    // Builds the partition (secondary = complement of primary) and validates
    // the invariants: indices in range, |primary| <= capacity.
    static TierState make(ViewCatalog catalog, std::set<int> primary, int primary_capacity);

    void validate() const;
};

enum class Rationale { kCapacityFree, kSwap, kNoAction };

const char* rationale_name(Rationale r);

struct Recommendation {
    std::optional<int> promote;
    std::optional<int> evict;
    double promote_score = 0.0;
    double evict_score = 0.0;
    Rationale rationale = Rationale::kNoAction;
};

// Argmax of pi over the secondary tier; ties broken by lowest catalog index.
int best_secondary(const StateVector& pi, const TierState& tier);

// Argmin of pi over the primary tier; ties broken by lowest catalog index.
int worst_primary(const StateVector& pi, const TierState& tier);

/*
 * Promotion/eviction decision: promote the best secondary view; pair it with
 * evicting the worst primary view only when the primary tier is full.
 * Degenerate tiers (empty secondary, or zero capacity) yield no_action.
 */
Recommendation recommend(const StateVector& pi_secondary, const StateVector& pi_primary,
                         const TierState& tier);

// Convenience mode: one global vector used for both argext computations.
Recommendation recommend(const StateVector& pi_global, const TierState& tier);

/*
 * Applies a recommendation: moves evict (if any) primary->secondary, then
 * promote (if any) secondary->primary. Throws CapacityViolation if the
 * promotion would overflow the primary tier.
 */
TierState apply(const TierState& tier, const Recommendation& rec);

// Single-line serialization:
// promote=<name|->, evict=<name|->, reason=<...>, promote_score=<val|->, evict_score=<val|->
std::string to_line(const Recommendation& rec, const ViewCatalog& catalog);

} // namespace mvmarkov

#endif // MVMARKOV_POLICY_HPP
