#include "mvmarkov/markov.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace mvmarkov {

namespace {

constexpr double kStochasticGate = 1e-6; // row-sum gate for iteration inputs

void require_same_size(const StateVector& v, const TransitionMatrix& P)
{
    if (v.size() != P.size())
        throw DimensionMismatch("state vector has " + std::to_string(v.size()) +
                                " entries, matrix is " + std::to_string(P.size()) + "x" +
                                std::to_string(P.size()));
}

} // namespace

TransitionMatrix::TransitionMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), data_(std::move(entries))
{
    if (data_.size() != n_ * n_)
        throw DimensionMismatch("expected " + std::to_string(n_ * n_) + " entries, got " +
                                std::to_string(data_.size()));
}

double TransitionMatrix::row_sum(std::size_t i) const
{
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j)
        s += at(i, j);
    return s;
}

bool TransitionMatrix::is_row_stochastic(double tol) const
{
    for (std::size_t i = 0; i < n_; ++i) {
        if (std::abs(row_sum(i) - 1.0) > tol)
            return false;
        for (std::size_t j = 0; j < n_; ++j)
            if (at(i, j) < 0.0)
                return false;
    }
    return true;
}

StateVector StateVector::unit(std::size_t n, std::size_t at)
{
    StateVector v;
    v.p.assign(n, 0.0);
    v.p.at(at) = 1.0;
    return v;
}

StateVector StateVector::uniform(std::size_t n)
{
    StateVector v;
    v.p.assign(n, 1.0 / static_cast<double>(n));
    return v;
}

StateVector step(const StateVector& v, const TransitionMatrix& P)
{
    require_same_size(v, P);
    const std::size_t n = P.size();
    StateVector out;
    out.p.assign(n, 0.0);
    out.iteration_index = v.iteration_index + 1;
    for (std::size_t i = 0; i < n; ++i) {
        const double vi = v.p[i];
        if (vi == 0.0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            out.p[j] += vi * P.at(i, j);
    }
    for (double& x : out.p)
        if (x < 0.0)
            x = 0.0;
    return out;
}

SteadyStateResult iterate_to_steady(const StateVector& v0, const TransitionMatrix& P, double tol,
                                    long max_iter)
{
    require_same_size(v0, P);
    if (tol <= 0.0)
        throw Error("tol must be positive");
    if (max_iter <= 0)
        throw Error("max_iter must be positive");
    if (!P.is_row_stochastic(kStochasticGate))
        throw NonStochasticMatrix("matrix rows do not sum to 1 within " +
                                  std::to_string(kStochasticGate));

    SteadyStateResult result;
    result.vector = v0;
    for (long k = 0; k < max_iter; ++k) {
        StateVector next = step(result.vector, P);
        double residual = 0.0;
        for (std::size_t j = 0; j < next.size(); ++j)
            residual = std::max(residual, std::abs(next.p[j] - result.vector.p[j]));
        result.vector = std::move(next);
        result.iterations = k + 1;
        result.residual = residual;
        if (residual <= tol) {
            result.converged = true;
            break;
        }
    }
    return result;
}

StateVector stationary_exact(const TransitionMatrix& P)
{
    if (!check_irreducible(P))
        throw ReducibleChain("positive-entry graph is not strongly connected");
    const std::size_t n = P.size();

    // Solve (P^T - I) x = 0 with the last equation replaced by sum(x) = 1.
    std::vector<double> a(n * n, 0.0);
    std::vector<double> b(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = P.at(j, i) - (i == j ? 1.0 : 0.0);
    }
    for (std::size_t j = 0; j < n; ++j)
        a[(n - 1) * n + j] = 1.0;
    b[n - 1] = 1.0;

    // Gaussian elimination with partial pivoting.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col]))
                pivot = r;
        if (a[pivot * n + col] == 0.0)
            throw ReducibleChain("singular stationary system");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a[pivot * n + j], a[col * n + j]);
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            if (f == 0.0)
                continue;
            for (std::size_t j = col; j < n; ++j)
                a[r * n + j] -= f * a[col * n + j];
            b[r] -= f * b[col];
        }
    }

    StateVector pi;
    pi.p.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            s -= a[i * n + j] * pi.p[j];
        pi.p[i] = s / a[i * n + i];
    }

    double total = 0.0;
    for (double& x : pi.p) {
        if (x < 0.0)
            x = 0.0;
        total += x;
    }
    for (double& x : pi.p)
        x /= total;
    return pi;
}

TransitionMatrix apply_damping(const TransitionMatrix& P, double d)
{
    if (d <= 0.0 || d > 1.0)
        throw Error("damping factor must be in (0, 1]");
    if (d == 1.0)
        return P;
    return TransitionMatrix(P.size(), blend_with_uniform(P.data(), P.size(), d));
}

bool check_irreducible(const TransitionMatrix& P)
{
    const std::size_t n = P.size();
    if (n == 0)
        return false;

    // Strong connectivity: every node reachable from node 0 in the graph
    // and in its transpose.
    auto reach = [&](bool transpose) {
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v) {
                const double w = transpose ? P.at(v, u) : P.at(u, v);
                if (w > 0.0 && !seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == n;
    };
    return reach(false) && reach(true);
}

} // namespace mvmarkov
