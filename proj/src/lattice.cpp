#include "greenbound/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "greenbound/error.hpp"

namespace greenbound {

namespace {

constexpr double range_slack = 1e-9;

std::int64_t lo_int(double v) { return static_cast<std::int64_t>(std::ceil(v - range_slack)); }
std::int64_t hi_int(double v) { return static_cast<std::int64_t>(std::floor(v + range_slack)); }

double admit_threshold(double U) { return U + 1e-6 * U; }

struct Coeffs {
    double a, b, c, d;
    explicit Coeffs(const UnimodularMatrix& g)
        : a(static_cast<double>(g.a())), b(static_cast<double>(g.b())),
          c(static_cast<double>(g.c())), d(static_cast<double>(g.d())) {}
};

// min over y in [y_min, y_max] of u(x + iy, gamma(x + iy))
double min_over_y(const Coeffs& k, double x, double y_min, double y_max) {
    const double t1 = k.a - k.c * x;
    const double t4 = k.d + k.c * x;
    const double W = k.b + (k.a - k.d) * x - k.c * x * x;
    double y;
    if (k.c == 0.0) {
        y = y_max;
    } else if (W == 0.0) {
        y = y_min;
    } else {
        y = std::clamp(std::sqrt(std::abs(W) / std::abs(k.c)), y_min, y_max);
    }
    const double t2 = W / y;
    const double t3 = k.c * y;
    return 0.5 * (t1 * t1 + t2 * t2 + t3 * t3 + t4 * t4);
}

template <class G>
double golden_min(G&& g, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    while (hi - lo > 1e-10) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = g(x2);
        }
    }
    return std::min({f1, f2, g(0.5 * (lo + hi))});
}

// Cheap rigorous lower bound: drop the W^2/y^2 term, minimize the rest termwise.
double lower_bound_u(const Coeffs& k, const Rectangle& R) {
    auto min_sq_linear = [](double p, double q, double x0, double x1) {
        // min of (p + q x)^2 on [x0, x1]
        const double v0 = p + q * x0, v1 = p + q * x1;
        if ((v0 <= 0.0 && v1 >= 0.0) || (v0 >= 0.0 && v1 <= 0.0)) return 0.0;
        return std::min(v0 * v0, v1 * v1);
    };
    const double m1 = min_sq_linear(k.a, -k.c, R.x_min(), R.x_max());
    const double m4 = min_sq_linear(k.d, k.c, R.x_min(), R.x_max());
    const double m3 = k.c * k.c * R.y_min() * R.y_min();
    return 0.5 * (m1 + m3 + m4);
}

}  // namespace

double min_u_over_rect(const UnimodularMatrix& g, const Rectangle& R) {
    const Coeffs k(g);
    auto gx = [&](double x) { return min_over_y(k, x, R.y_min(), R.y_max()); };
    const double x0 = R.x_min(), x1 = R.x_max();
    if (x1 - x0 <= 1e-10) return gx(0.5 * (x0 + x1));
    const double mid = 0.5 * (x0 + x1);
    double best = std::min({gx(x0), gx(mid), gx(x1)});
    best = std::min(best, golden_min(gx, x0, mid));
    best = std::min(best, golden_min(gx, mid, x1));
    best = std::min(best, golden_min(gx, x0, x1));
    return best;
}

CandidateSet enumerate_candidates(const Rectangle& R, double U) {
    if (!(U >= 1.0)) throw DomainError("enumerate_candidates: needs U >= 1");
    CandidateSet out;
    const double threshold = admit_threshold(U);
    auto consider = [&](const UnimodularMatrix& g) {
        const Coeffs k(g);
        if (lower_bound_u(k, R) > threshold) return;
        const double m = min_u_over_rect(g, R);
        if (m <= threshold) {
            out.matrices.push_back(g);
            out.min_u_estimate.push_back(m);
        }
    };

    const double r = std::sqrt(2.0 * U);
    const std::int64_t bmax = hi_int(R.y_max() * std::sqrt(2.0 * U - 2.0));
    for (std::int64_t b = -bmax; b <= bmax; ++b) consider(UnimodularMatrix(1, b, 0, 1));

    const std::int64_t cmax = hi_int(r / R.y_min());
    for (std::int64_t c = 1; c <= cmax; ++c) {
        const double dc = static_cast<double>(c);
        const std::int64_t a_lo = lo_int(-r + dc * R.x_min()), a_hi = hi_int(r + dc * R.x_max());
        const std::int64_t d_lo = lo_int(-r - dc * R.x_max()), d_hi = hi_int(r - dc * R.x_min());
        for (std::int64_t a = a_lo; a <= a_hi; ++a) {
            for (std::int64_t d = d_lo; d <= d_hi; ++d) {
                const std::int64_t num = a * d - 1;
                if (num % c != 0) continue;
                consider(UnimodularMatrix(a, num / c, c, d));
            }
        }
    }
    return out;
}

unsigned default_thread_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GREENBOUND_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
            // unparsable values are ignored
        }
    }
    return n;
}

CountCertificate count_bound(const Rectangle& R, double U, int nx, int ny, unsigned threads) {
    if (!(U >= 1.0)) throw DomainError("count_bound: needs U >= 1");
    if (nx < 1 || ny < 1) throw DomainError("count_bound: grid dimensions must be positive");
    const CandidateSet cand = enumerate_candidates(R, U);
    std::vector<Coeffs> coeffs;
    coeffs.reserve(cand.size());
    for (const auto& g : cand.matrices) coeffs.emplace_back(g);

    const double threshold = admit_threshold(U);
    std::vector<std::vector<int>> counts(nx, std::vector<int>(ny, 0));

    auto do_column = [&](int i) {
        for (int j = 0; j < ny; ++j) {
            const Rectangle cell = R.cell(i, j, nx, ny);
            int n = 0;
            for (std::size_t k = 0; k < cand.size(); ++k) {
                if (lower_bound_u(coeffs[k], cell) > threshold) continue;
                if (min_u_over_rect(cand.matrices[k], cell) <= threshold) ++n;
            }
            counts[i][j] = n;
        }
    };

    if (threads == 0) threads = default_thread_count();
    threads = std::min<unsigned>(threads, static_cast<unsigned>(nx));
    if (threads <= 1) {
        for (int i = 0; i < nx; ++i) do_column(i);
    } else {
        // Columns are strided across workers; each writes only its own entries.
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (int i = static_cast<int>(t); i < nx; i += static_cast<int>(threads)) do_column(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    int best = 0;
    for (const auto& col : counts)
        for (int v : col) best = std::max(best, v);
    return {R, U, nx, ny, std::move(counts), 2 * static_cast<std::int64_t>(best)};
}

namespace {

// Calls f(g, u) for one representative g of each pair +-g with u(z, g w) <= U (1 + 1e-12).
template <class F>
void for_each_within(const UpperHalfPoint& z, const UpperHalfPoint& w, double U, F&& f) {
    if (!(U >= 1.0)) throw DomainError("lattice enumeration needs U >= 1");
    const bool same = (z == w);
    const double limit = U + 1e-12 * U;
    auto visit = [&](const UnimodularMatrix& g) {
        const double u = same ? u_of_gamma(g, z) : point_u(z, mobius_apply(g, w));
        if (u <= limit) f(g, u);
    };

    const double bw = std::sqrt(2.0 * U * z.y() * w.y());
    const double shift = z.x() - w.x();
    for (std::int64_t b = lo_int(shift - bw); b <= hi_int(shift + bw); ++b) visit(UnimodularMatrix(1, b, 0, 1));

    const std::int64_t cmax = hi_int(std::sqrt(2.0 * U / (z.y() * w.y())));
    const double ra = std::sqrt(2.0 * U * z.y() / w.y());
    const double rd = std::sqrt(2.0 * U * w.y() / z.y());
    for (std::int64_t c = 1; c <= cmax; ++c) {
        const double dc = static_cast<double>(c);
        for (std::int64_t a = lo_int(z.x() * dc - ra); a <= hi_int(z.x() * dc + ra); ++a) {
            for (std::int64_t d = lo_int(-w.x() * dc - rd); d <= hi_int(-w.x() * dc + rd); ++d) {
                const std::int64_t num = a * d - 1;
                if (num % c != 0) continue;
                visit(UnimodularMatrix(a, num / c, c, d));
            }
        }
    }
}

}  // namespace

std::int64_t exact_count(const UpperHalfPoint& z, const UpperHalfPoint& w, double U) {
    std::int64_t reps = 0;
    for_each_within(z, w, U, [&](const UnimodularMatrix&, double) { ++reps; });
    return 2 * reps;
}

std::vector<std::pair<UnimodularMatrix, double>> matrices_within(const UpperHalfPoint& z, const UpperHalfPoint& w,
                                                                 double U) {
    std::vector<std::pair<UnimodularMatrix, double>> out;
    for_each_within(z, w, U, [&](const UnimodularMatrix& g, double u) { out.emplace_back(g, u); });
    return out;
}

}  // namespace greenbound
