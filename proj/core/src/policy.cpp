#include "mvmarkov/policy.hpp"

#include <cstdio>
#include <utility>

namespace mvmarkov {

namespace {

std::string format_score(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void require_sized(const StateVector& pi, const TierState& tier, const char* which)
{
    if (static_cast<int>(pi.size()) != tier.catalog.size())
        throw DimensionMismatch(std::string(which) + " vector has " + std::to_string(pi.size()) +
                                " entries for a catalog of " + std::to_string(tier.catalog.size()));
}

} // namespace

TierState TierState::make(ViewCatalog catalog, std::set<int> primary, int primary_capacity)
{
    TierState tier;
    tier.catalog = std::move(catalog);
    tier.primary = std::move(primary);
    tier.primary_capacity = primary_capacity;
    for (int v = 0; v < tier.catalog.size(); ++v)
        if (!tier.primary.count(v))
            tier.secondary.insert(v);
    tier.validate();
    return tier;
}

void TierState::validate() const
{
    if (primary_capacity < 0)
        throw Error("primary_capacity must be >= 0");
    if (static_cast<int>(primary.size()) > primary_capacity)
        throw CapacityViolation("primary tier holds " + std::to_string(primary.size()) +
                                " views, capacity is " + std::to_string(primary_capacity));
    std::size_t total = 0;
    for (int v : primary) {
        if (v < 0 || v >= catalog.size())
            throw IndexOutOfCatalog("primary view index " + std::to_string(v));
        if (secondary.count(v))
            throw Error("view " + std::to_string(v) + " is in both tiers");
        ++total;
    }
    for (int v : secondary) {
        if (v < 0 || v >= catalog.size())
            throw IndexOutOfCatalog("secondary view index " + std::to_string(v));
        ++total;
    }
    if (total != static_cast<std::size_t>(catalog.size()))
        throw Error("tiers do not partition the catalog");
}

const char* rationale_name(Rationale r)
{
    switch (r) {
    case Rationale::kCapacityFree: return "capacity_free";
    case Rationale::kSwap: return "swap";
    case Rationale::kNoAction: return "no_action";
    }
    return "no_action";
}

int best_secondary(const StateVector& pi, const TierState& tier)
{
    require_sized(pi, tier, "secondary");
    if (tier.secondary.empty())
        throw EmptyTier("secondary tier is empty");
    int best = -1;
    for (int v : tier.secondary) // ascending order: ties keep the lowest index
        if (best < 0 || pi.p[static_cast<std::size_t>(v)] > pi.p[static_cast<std::size_t>(best)])
            best = v;
    return best;
}

int worst_primary(const StateVector& pi, const TierState& tier)
{
    require_sized(pi, tier, "primary");
    if (tier.primary.empty())
        throw EmptyTier("primary tier is empty");
    int worst = -1;
    for (int v : tier.primary)
        if (worst < 0 || pi.p[static_cast<std::size_t>(v)] < pi.p[static_cast<std::size_t>(worst)])
            worst = v;
    return worst;
}

Recommendation recommend(const StateVector& pi_secondary, const StateVector& pi_primary,
                         const TierState& tier)
{
    Recommendation rec;
    if (tier.secondary.empty())
        return rec;

    const int candidate = best_secondary(pi_secondary, tier);
    if (static_cast<int>(tier.primary.size()) < tier.primary_capacity) {
        rec.promote = candidate;
        rec.promote_score = pi_secondary.p[static_cast<std::size_t>(candidate)];
        rec.rationale = Rationale::kCapacityFree;
        return rec;
    }
    if (tier.primary.empty())
        return rec; // zero capacity: nothing can be promoted

    rec.promote = candidate;
    rec.promote_score = pi_secondary.p[static_cast<std::size_t>(candidate)];
    rec.evict = worst_primary(pi_primary, tier);
    rec.evict_score = pi_primary.p[static_cast<std::size_t>(*rec.evict)];
    rec.rationale = Rationale::kSwap;
    return rec;
}

Recommendation recommend(const StateVector& pi_global, const TierState& tier)
{
    return recommend(pi_global, pi_global, tier);
}

TierState apply(const TierState& tier, const Recommendation& rec)
{
    TierState out = tier;
    if (rec.evict) {
        if (!out.primary.count(*rec.evict))
            throw Error("evict target is not in.primary tier");
        out.primary.erase(*rec.evict);
        out.secondary.insert(*rec.evict);
    }
    if (rec.promote) {
        if (!out.secondary.count(*rec.promote))
            throw Error("promote target is not in secondary tier");
        if (static_cast<int>(out.primary.size()) >= out.primary_capacity)
            throw CapacityViolation("promoting view " + std::to_string(*rec.promote) +
                                    " would exceed primary capacity " +
                                    std::to_string(out.primary_capacity));
        out.secondary.erase(*rec.promote);
        out.primary.insert(*rec.promote);
    }
    out.validate();
    return out;
}

std::string to_line(const Recommendation& rec, const ViewCatalog& catalog)
{
    std::string line = "promote=";
    line += rec.promote ? catalog.name(*rec.promote) : "-";
    line += ", evict=";
    line += rec.evict ? catalog.name(*rec.evict) : "-";
    line += ", reason=";
    line += rationale_name(rec.rationale);
    line += ", promote_score=";
    line += rec.promote ? format_score(rec.promote_score) : "-";
    line += ", evict_score=";
    line += rec.evict ? format_score(rec.evict_score) : "-";
    return line;
}

} // namespace mvmarkov
