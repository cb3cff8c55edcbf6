#ifndef MVMARKOV_TRACE_HPP
#define MVMARKOV_TRACE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mvmarkov/errors.hpp"

namespace mvmarkov {

/*
 * A catalog of materialized-view names with a dense index 0..n-1.
 * Names are unique, non-empty, and the name<->index mapping is a bijection.
 */
class ViewCatalog {
public:
    ViewCatalog() = default;
    explicit ViewCatalog(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int index) const { return names_.at(static_cast<std::size_t>(index)); }
    const std::vector<std::string>& names() const { return names_; }

    // Index of a known name; throws CatalogMismatch for unknown names.
    int index(const std::string& name) const;
    std::optional<int> find(const std::string& name) const;

    bool operator==(const ViewCatalog& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

// One query answered by one view. seq is the position in the trace.
struct HitEvent {
    long seq = 0;
    std::string query_id;
    int view = 0;
};

struct QueryTrace {
    ViewCatalog catalog;
    std::vector<HitEvent> events;

    // The bare view-index sequence, in trace order.
    std::vector<int> view_sequence() const;
};

// m x n boolean View Hit Matrix: one row per query, one true cell per row.
struct ViewHitMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> cells; // row-major

    bool at(std::size_t r, std::size_t c) const { return cells[r * cols + c] != 0; }
};

inline const char* kTraceHeader = "query_id,view_id";

/*
 * Trace CSV: optional header line exactly "query_id,view_id", then one
 * "<query_id>,<view_name>" line per event. No quoting, LF line endings.
 * The catalog is built from distinct view names in first-appearance order;
 * seq is assigned 0,1,2,... by position.
 */
QueryTrace parse_trace(std::istream& in);

// Same, but view names must resolve against a pre-built catalog
// (throws CatalogMismatch otherwise). Catalog order wins over appearance order.
QueryTrace parse_trace(std::istream& in, const ViewCatalog& catalog);

// Writes the canonical header followed by the event lines.
void serialize_trace(const QueryTrace& trace, std::ostream& out);

// Catalog sidecar: one view name per line, position = index.
ViewCatalog parse_catalog(std::istream& in);

ViewHitMatrix vhm_from_trace(const QueryTrace& trace);

} // namespace mvmarkov

#endif // MVMARKOV_TRACE_HPP
