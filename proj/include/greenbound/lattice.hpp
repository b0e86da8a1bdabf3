#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "greenbound/geom.hpp"

namespace greenbound {

/// One representative per pair {gamma, -gamma}: c > 0, or c = 0 with a = d = 1.
/// Ordered by (c, a, d) ascending.
struct CandidateSet {
    std::vector<UnimodularMatrix> matrices;
    std::vector<double> min_u_estimate;  // parallel to matrices, minimum of u(z, gamma z) over the region

    std::size_t size() const noexcept { return matrices.size(); }
};

struct CountCertificate {
    Rectangle region;
    double U;
    int nx;
    int ny;
    // per_cell_counts[i][j]: representatives admitted in cell (i, j), i indexing x
    std::vector<std::vector<int>> per_cell_counts;
    std::int64_t bound;  // 2 * max over cells

    friend bool operator==(const CountCertificate&, const CountCertificate&) = default;
};

/// Representatives gamma whose minimum of u(z, gamma z) over R can be <= U.
CandidateSet enumerate_candidates(const Rectangle& R, double U);

/// Minimum over z in R of u(z, gamma z). Exact in y, multistart golden section in x.
double min_u_over_rect(const UnimodularMatrix& g, const Rectangle& R);

/// Upper bound for sup_{z in R} #{gamma in SL2(Z) : u(z, gamma z) <= U}.
/// threads = 0 picks the default (GREENBOUND_THREADS or hardware concurrency).
CountCertificate count_bound(const Rectangle& R, double U, int nx, int ny, unsigned threads = 0);

/// #{gamma in SL2(Z) : u(z, gamma w) <= U}, both signs counted.
std::int64_t exact_count(const UpperHalfPoint& z, const UpperHalfPoint& w, double U);

/// One representative of each pair {gamma, -gamma} with u(z, gamma w) <= U, with that u.
std::vector<std::pair<UnimodularMatrix, double>> matrices_within(const UpperHalfPoint& z, const UpperHalfPoint& w,
                                                                 double U);

/// Thread count honouring GREENBOUND_THREADS as a cap.
unsigned default_thread_count();

}  // namespace greenbound
