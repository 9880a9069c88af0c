#pragma once

// Dense phase-one simplex for small equality systems: decide whether
// A x = b, x >= 0 has a solution. Sized for convex-hull membership, where A
// has d+1 rows and one column per generator point.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace halfsep {

class LpFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PhaseOneResult {
    /// Sum of artificial variables at the optimum; 0 means feasible.
    double infeasibility = 0.0;
    std::size_t pivots = 0;
    /// Simplex multipliers y in the caller's row signs: y.A_j <= 0 for every
    /// column and y.b equals the infeasibility. A Farkas certificate when the
    /// system is infeasible.
    std::vector<double> certificate;
};

/**
 * @brief Minimizes the sum of artificials for A x + s = b, x, s >= 0.
 *
 * `a` is row-major, rows x cols. Dantzig pricing, switching to Bland's rule
 * after a run of degenerate pivots. Throws LpFailure on non-finite input,
 * non-finite intermediate values or when the pivot limit is reached.
 */
inline PhaseOneResult phase_one(std::span<const double> a, std::span<const double> b, std::size_t rows,
                                std::size_t cols, double pivot_tol = 1e-12) {
    if (a.size() != rows * cols || b.size() != rows) throw std::invalid_argument("phase_one: dimension mismatch");
    const std::size_t width = cols + rows + 1;  // structural, artificial, rhs
    std::vector<double> t((rows + 1) * width, 0.0);
    auto at = [&](std::size_t r, std::size_t c) -> double& { return t[r * width + c]; };
    std::vector<std::size_t> basis(rows);

    for (std::size_t r = 0; r < rows; ++r) {
        const double sign = b[r] < 0 ? -1.0 : 1.0;
        for (std::size_t c = 0; c < cols; ++c) {
            const double v = a[r * cols + c];
            if (!std::isfinite(v)) throw LpFailure("phase_one: non-finite coefficient");
            at(r, c) = sign * v;
        }
        if (!std::isfinite(b[r])) throw LpFailure("phase_one: non-finite right-hand side");
        at(r, cols + r) = 1.0;
        at(r, width - 1) = sign * b[r];
        basis[r] = cols + r;
    }
    // objective row holds reduced costs of "minimize sum of artificials"
    for (std::size_t c = 0; c < cols; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < rows; ++r) s += at(r, c);
        at(rows, c) = -s;
    }
    {
        double s = 0.0;
        for (std::size_t r = 0; r < rows; ++r) s += at(r, width - 1);
        at(rows, width - 1) = -s;
    }

    const std::size_t max_pivots = 50 * (cols + rows) + 1000;
    std::size_t degenerate_run = 0;
    PhaseOneResult res;
    for (;;) {
        const bool bland = degenerate_run > 30;
        std::size_t enter = width;
        double best = -1e-11;
        for (std::size_t c = 0; c + 1 < width; ++c) {
            const double rc = at(rows, c);
            if (rc < best) {
                enter = c;
                if (bland) break;
                best = rc;
            }
        }
        if (enter == width) break;

        std::size_t leave = rows;
        double ratio = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < rows; ++r) {
            const double p = at(r, enter);
            if (p <= pivot_tol) continue;
            const double q = at(r, width - 1) / p;
            if (q < ratio - 1e-15 || (q <= ratio + 1e-15 && leave < rows && basis[r] < basis[leave])) {
                ratio = q;
                leave = r;
            }
        }
        // phase one is bounded below by zero; an unbounded column means breakdown
        if (leave == rows) throw LpFailure("phase_one: unbounded direction in a bounded problem");

        degenerate_run = (ratio <= 1e-14) ? degenerate_run + 1 : 0;
        const double piv = at(leave, enter);
        for (std::size_t c = 0; c < width; ++c) at(leave, c) /= piv;
        for (std::size_t r = 0; r <= rows; ++r) {
            if (r == leave) continue;
            const double f = at(r, enter);
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < width; ++c) at(r, c) -= f * at(leave, c);
        }
        basis[leave] = enter;
        if (++res.pivots > max_pivots) throw LpFailure("phase_one: pivot limit reached");
    }
    res.infeasibility = -at(rows, width - 1);
    if (!std::isfinite(res.infeasibility)) throw LpFailure("phase_one: non-finite objective");
    if (res.infeasibility < 0.0) res.infeasibility = 0.0;
    res.certificate.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const double sign = b[r] < 0 ? -1.0 : 1.0;
        res.certificate[r] = sign * (1.0 - at(rows, cols + r));
    }
    return res;
}

}  // namespace halfsep
