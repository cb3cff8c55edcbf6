#ifndef MVMARKOV_MARKOV_HPP
#define MVMARKOV_MARKOV_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "mvmarkov/errors.hpp"

namespace mvmarkov {

// Dense row-stochastic transition matrix. Rows are "from", columns "to".
class TransitionMatrix {
public:
    TransitionMatrix() = default;
    explicit TransitionMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
    TransitionMatrix(std::size_t n, std::vector<double> entries);

    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const std::vector<double>& data() const { return data_; }

    double row_sum(std::size_t i) const;
    // Entries non-negative and every row sum within tol of 1.
    bool is_row_stochastic(double tol) const;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

// Probability distribution over views. iteration_index is the 1-based
// future-period counter: 1 for the starting state, +1 per multiplication.
struct StateVector {
    std::vector<double> p;
    long iteration_index = 1;

    std::size_t size() const { return p.size(); }

    static StateVector unit(std::size_t n, std::size_t at);
    static StateVector uniform(std::size_t n);
};

struct SteadyStateResult {
    StateVector vector;
    long iterations = 0;
    bool converged = false;
    double residual = std::numeric_limits<double>::infinity();
};

// One multiplication of the state vector by the matrix: out[j] = sum_i v[i]*P(i,j).
StateVector step(const StateVector& v, const TransitionMatrix& P);

/*
 * Repeats step until the max-norm change between consecutive vectors is
 * <= tol, or max_iter multiplications have been performed. Throws
 * NonStochasticMatrix if P's rows deviate from sum 1 by more than 1e-6.
 */
SteadyStateResult iterate_to_steady(const StateVector& v0, const TransitionMatrix& P,
                                    double tol = 1e-8, long max_iter = 10000);

/*
 * The unique stationary distribution pi with pi*P = pi, sum(pi) = 1,
 * computed by a direct linear solve (Gaussian elimination with partial
 * pivoting). Throws ReducibleChain when the positive-entry graph is not
 * strongly connected.
 */
StateVector stationary_exact(const TransitionMatrix& P);

// P' = d*P + (1-d)*U with U the uniform matrix. d = 1 returns P unchanged.
TransitionMatrix apply_damping(const TransitionMatrix& P, double d);

// True iff the directed graph of entries > 0 is strongly connected.
bool check_irreducible(const TransitionMatrix& P);

/*
 * Generic blend of a row-major matrix with the uniform matrix, usable with
 * exact scalar types. d = 1 returns the input unchanged.
 */
template <class Scalar>
std::vector<Scalar> blend_with_uniform(const std::vector<Scalar>& rowmajor, std::size_t n,
                                       const Scalar& d)
{
    if (d == Scalar(1))
        return rowmajor;
    std::vector<Scalar> out(rowmajor.size());
    const Scalar off = (Scalar(1) - d) / Scalar(static_cast<int>(n));
    for (std::size_t k = 0; k < rowmajor.size(); ++k)
        out[k] = d * rowmajor[k] + off;
    return out;
}

} // namespace mvmarkov

#endif // MVMARKOV_MARKOV_HPP
