#ifndef MVMARKOV_ESTIMATOR_HPP
#define MVMARKOV_ESTIMATOR_HPP

#include <map>
#include <vector>

#include "mvmarkov/markov.hpp"
#include "mvmarkov/rational.hpp"
#include "mvmarkov/trace.hpp"

namespace mvmarkov {

/*
 * A maximal run of consecutive hits on one view, closed by the first hit
 * on a different view. run_length counts the hits on start_view.
 */
struct Episode {
    int start_view = 0;
    long run_length = 1; // >= 1
    int next_view = 0;   // != start_view

    bool operator==(const Episode&) const = default;
};

struct ExtractResult {
    std::vector<Episode> episodes;
    long discarded_trailing_hits = 0; // length of an unclosed final run
};

/*
 * Partitions the view sequence into episodes. The closing event is consumed
 * by its episode: the run after an episode starts at the event *after* the
 * close. A final run with no closing transition is discarded and its length
 * reported. Replaying run_length copies of start_view plus next_view per
 * episode, then the discarded tail, reproduces the sequence exactly.
 */
ExtractResult extract_episodes(const std::vector<int>& views);
ExtractResult extract_episodes(const QueryTrace& trace);

/*
 * The two-entry probability row contributed by one episode:
 * start -> run/(run+1), next -> 1/(run+1). Exact rationals; sums to 1.
 */
struct EpisodeRow {
    int start_view = 0;
    std::map<int, Rational> probs;
};

EpisodeRow episode_probabilities(const Episode& e);

enum class DefaultRow { kUniform, kSelfLoop };
enum class Weighting { kEpisodeMean, kTransitionCounts };

struct RowProvenance {
    long episode_count = 0; // 0 means the row was defaulted
    bool observed() const { return episode_count > 0; }
};

/*
 * n x n row-stochastic matrix of estimated view-transition probabilities.
 * Cells are exact rationals internally; at() converts to double.
 */
class InitialProbabilityMatrix {
public:
    InitialProbabilityMatrix() = default;
    explicit InitialProbabilityMatrix(int n)
        : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)),
          provenance_(static_cast<std::size_t>(n))
    {
    }

    int size() const { return n_; }
    const Rational& rational_at(int i, int j) const { return cells_[idx(i, j)]; }
    Rational& rational_at(int i, int j) { return cells_[idx(i, j)]; }
    double at(int i, int j) const { return to_double(cells_[idx(i, j)]); }

    const RowProvenance& provenance(int i) const { return provenance_.at(static_cast<std::size_t>(i)); }
    RowProvenance& provenance(int i) { return provenance_.at(static_cast<std::size_t>(i)); }

    Rational rational_row_sum(int i) const;
    TransitionMatrix to_transition_matrix() const;

private:
    std::size_t idx(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<Rational> cells_;
    std::vector<RowProvenance> provenance_;
};

/*
 * Assembles the matrix from episodes. Rows of views with k >= 1 episodes are
 * the unweighted mean of their k episode rows (kEpisodeMean) or normalized
 * within-episode transition counts (kTransitionCounts); views with no
 * episodes get the default row. Throws IndexOutOfCatalog for out-of-range
 * episode views.
 */
InitialProbabilityMatrix build_initial_matrix(const std::vector<Episode>& episodes, int n,
                                              DefaultRow default_row = DefaultRow::kUniform,
                                              Weighting weighting = Weighting::kEpisodeMean);

} // namespace mvmarkov

#endif // MVMARKOV_ESTIMATOR_HPP
