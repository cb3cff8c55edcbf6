#include "mvmarkov/estimator.hpp"

#include <string>

namespace mvmarkov {

ExtractResult extract_episodes(const std::vector<int>& views)
{
    ExtractResult result;
    std::size_t pos = 0;
    while (pos < views.size()) {
        const int start = views[pos];
        std::size_t end = pos + 1;
        while (end < views.size() && views[end] == start)
            ++end;
        if (end == views.size()) {
            result.discarded_trailing_hits = static_cast<long>(end - pos);
            break;
        }
        result.episodes.push_back(
            Episode{start, static_cast<long>(end - pos), views[end]});
        pos = end + 1; // the closing event is consumed by this episode
    }
    return result;
}

ExtractResult extract_episodes(const QueryTrace& trace)
{
    return extract_episodes(trace.view_sequence());
}

EpisodeRow episode_probabilities(const Episode& e)
{
    if (e.run_length < 1)
        throw Error("episode run_length must be >= 1");
    if (e.next_view == e.start_view)
        throw Error("episode next_view must differ from start_view");

    EpisodeRow row;
    row.start_view = e.start_view;
    const Rational total(e.run_length);
    row.probs[e.start_view] = total / (total + 1);
    row.probs[e.next_view] = Rational(1) / (total + 1);
    return row;
}

Rational InitialProbabilityMatrix::rational_row_sum(int i) const
{
    Rational s = 0;
    for (int j = 0; j < n_; ++j)
        s += rational_at(i, j);
    return s;
}

TransitionMatrix InitialProbabilityMatrix::to_transition_matrix() const
{
    TransitionMatrix m(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = at(i, j);
    return m;
}

InitialProbabilityMatrix build_initial_matrix(const std::vector<Episode>& episodes, int n,
                                              DefaultRow default_row, Weighting weighting)
{
    if (n < 0)
        throw Error("view count must be non-negative");
    for (const auto& e : episodes) {
        if (e.start_view < 0 || e.start_view >= n || e.next_view < 0 || e.next_view >= n)
            throw IndexOutOfCatalog("episode references view outside catalog of size " +
                                    std::to_string(n));
    }

    InitialProbabilityMatrix m(n);

    if (weighting == Weighting::kEpisodeMean) {
        for (const auto& e : episodes) {
            const EpisodeRow row = episode_probabilities(e);
            for (const auto& [col, p] : row.probs)
                m.rational_at(e.start_view, col) += p;
            ++m.provenance(e.start_view).episode_count;
        }
        for (int i = 0; i < n; ++i) {
            const long k = m.provenance(i).episode_count;
            if (k == 0)
                continue;
            for (int j = 0; j < n; ++j)
                m.rational_at(i, j) /= k;
        }
    } else {
        // Within-episode transition counts: run_length-1 self transitions
        // plus one transition to the closing view, normalized per row.
        std::vector<Rational> row_total(static_cast<std::size_t>(n));
        for (const auto& e : episodes) {
            m.rational_at(e.start_view, e.start_view) += e.run_length - 1;
            m.rational_at(e.start_view, e.next_view) += 1;
            row_total[static_cast<std::size_t>(e.start_view)] += e.run_length;
            ++m.provenance(e.start_view).episode_count;
        }
        for (int i = 0; i < n; ++i) {
            const Rational& total = row_total[static_cast<std::size_t>(i)];
            if (total == 0)
                continue;
            for (int j = 0; j < n; ++j)
                m.rational_at(i, j) /= total;
        }
    }

    for (int i = 0; i < n; ++i) {
        if (m.provenance(i).observed())
            continue;
        if (default_row == DefaultRow::kUniform) {
            const Rational u = Rational(1) / n;
            for (int j = 0; j < n; ++j)
                m.rational_at(i, j) = u;
        } else {
            m.rational_at(i, i) = 1;
        }
    }
    return m;
}

} // namespace mvmarkov
