#include "mvmarkov/trace.hpp"

#include <istream>
#include <ostream>
#include <utility>

namespace mvmarkov {

ViewCatalog::ViewCatalog(std::vector<std::string> names) : names_(std::move(names))
{
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw Error("catalog: empty view name at index " + std::to_string(i));
        auto [it, inserted] = index_.emplace(names_[i], static_cast<int>(i));
        if (!inserted)
            throw Error("catalog: duplicate view name '" + names_[i] + "'");
    }
}

int ViewCatalog::index(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        throw CatalogMismatch("view '" + name + "' is not in the catalog");
    return it->second;
}

std::optional<int> ViewCatalog::find(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<int> QueryTrace::view_sequence() const
{
    std::vector<int> views;
    views.reserve(events.size());
    for (const auto& e : events)
        views.push_back(e.view);
    return views;
}

namespace {

struct RawEvent {
    std::string query_id;
    std::string view_name;
};

// Splits the input into raw events, handling the optional header line.
// Line numbers are 1-based over the whole file, header included.
std::vector<RawEvent> read_raw_events(std::istream& in)
{
    std::vector<RawEvent> raw;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        auto comma = line.find(',');
        std::string first = line.substr(0, comma == std::string::npos ? line.size() : comma);
        if (first == "query_id") {
            // Header-shaped line: must be the exact header, on the first line only.
            if (line != kTraceHeader)
                throw DuplicateHeaderMismatch(line_no, "header row does not match '" +
                                                           std::string(kTraceHeader) + "': '" + line + "'");
            if (line_no != 1)
                throw DuplicateHeaderMismatch(line_no, "duplicate header row");
            continue;
        }
        if (comma == std::string::npos)
            throw MalformedLine(line_no, "expected 2 comma-separated fields, got 1");
        std::string rest = line.substr(comma + 1);
        if (rest.find(',') != std::string::npos)
            throw MalformedLine(line_no, "expected 2 comma-separated fields, got more");
        if (rest.empty())
            throw MalformedLine(line_no, "empty view name");
        raw.push_back(RawEvent{std::move(first), std::move(rest)});
    }
    return raw;
}

} // namespace

QueryTrace parse_trace(std::istream& in)
{
    std::vector<RawEvent> raw = read_raw_events(in);

    std::vector<std::string> names;
    std::unordered_map<std::string, int> seen;
    for (const auto& r : raw) {
        if (seen.emplace(r.view_name, static_cast<int>(names.size())).second)
            names.push_back(r.view_name);
    }

    QueryTrace trace;
    trace.catalog = ViewCatalog(std::move(names));
    trace.events.reserve(raw.size());
    long seq = 0;
    for (auto& r : raw)
        trace.events.push_back(HitEvent{seq++, std::move(r.query_id), seen.at(r.view_name)});
    return trace;
}

QueryTrace parse_trace(std::istream& in, const ViewCatalog& catalog)
{
    std::vector<RawEvent> raw = read_raw_events(in);

    QueryTrace trace;
    trace.catalog = catalog;
    trace.events.reserve(raw.size());
    long seq = 0;
    for (auto& r : raw)
        trace.events.push_back(HitEvent{seq++, std::move(r.query_id), catalog.index(r.view_name)});
    return trace;
}

void serialize_trace(const QueryTrace& trace, std::ostream& out)
{
    out << kTraceHeader << '\n';
    for (const auto& e : trace.events)
        out << e.query_id << ',' << trace.catalog.name(e.view) << '\n';
}

ViewCatalog parse_catalog(std::istream& in)
{
    std::vector<std::string> names;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            throw MalformedLine(line_no, "empty view name in catalog");
        names.push_back(line);
    }
    return ViewCatalog(std::move(names));
}

ViewHitMatrix vhm_from_trace(const QueryTrace& trace)
{
    ViewHitMatrix vhm;
    vhm.rows = trace.events.size();
    vhm.cols = static_cast<std::size_t>(trace.catalog.size());
    vhm.cells.assign(vhm.rows * vhm.cols, 0);
    for (std::size_t q = 0; q < vhm.rows; ++q)
        vhm.cells[q * vhm.cols + static_cast<std::size_t>(trace.events[q].view)] = 1;
    return vhm;
}

} // namespace mvmarkov
