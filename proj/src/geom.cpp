#include "greenbound/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "greenbound/error.hpp"

namespace greenbound {

UpperHalfPoint::UpperHalfPoint(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0))
        throw DomainError("upper half-plane point needs finite x and y > 0, got y = " + std::to_string(y));
}

UnimodularMatrix::UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
    // __int128 keeps the determinant check exact for any 64-bit entries.
    const __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
    if (det != 1) throw DomainError("matrix determinant is not 1");
}

Rectangle::Rectangle(double x_min, double x_max, double y_min, double y_max)
    : x_min_(x_min), x_max_(x_max), y_min_(y_min), y_max_(y_max) {
    if (!(x_min <= x_max)) throw DomainError("rectangle needs x_min <= x_max");
    if (!(y_min > 0.0)) throw DomainError("rectangle needs y_min > 0");
    if (!(y_min <= y_max)) throw DomainError("rectangle needs y_min <= y_max");
}

bool Rectangle::contains(const UpperHalfPoint& z) const noexcept {
    return z.x() >= x_min_ && z.x() <= x_max_ && z.y() >= y_min_ && z.y() <= y_max_;
}

Rectangle Rectangle::cell(int i, int j, int nx, int ny) const {
    const double dx = (x_max_ - x_min_) / nx;
    const double dy = (y_max_ - y_min_) / ny;
    // Outer edges are pinned so the cells tile the rectangle exactly.
    const double x0 = x_min_ + i * dx;
    const double x1 = (i + 1 == nx) ? x_max_ : x_min_ + (i + 1) * dx;
    const double y0 = y_min_ + j * dy;
    const double y1 = (j + 1 == ny) ? y_max_ : y_min_ + (j + 1) * dy;
    return {x0, x1, y0, y1};
}

double point_u(const UpperHalfPoint& z, const UpperHalfPoint& w) noexcept {
    const double dx = z.x() - w.x();
    const double dy = z.y() - w.y();
    return 1.0 + (dx * dx + dy * dy) / (2.0 * z.y() * w.y());
}

UpperHalfPoint mobius_apply(const UnimodularMatrix& g, const UpperHalfPoint& z) {
    const double a = static_cast<double>(g.a()), b = static_cast<double>(g.b());
    const double c = static_cast<double>(g.c()), d = static_cast<double>(g.d());
    // (a z + b)(c conj(z) + d) / |c z + d|^2
    const double den_re = c * z.x() + d;
    const double den_im = c * z.y();
    const double norm = den_re * den_re + den_im * den_im;
    const double num_re = (a * z.x() + b) * den_re + a * z.y() * den_im;
    return {num_re / norm, z.y() / norm};
}

double u_of_gamma(const UnimodularMatrix& g, const UpperHalfPoint& z) noexcept {
    const double a = static_cast<double>(g.a()), b = static_cast<double>(g.b());
    const double c = static_cast<double>(g.c()), d = static_cast<double>(g.d());
    const double x = z.x(), y = z.y();
    const double t1 = a - c * x;
    const double t2 = (b + (a - d) * x - c * x * x) / y;
    const double t3 = c * y;
    const double t4 = d + c * x;
    return 0.5 * (t1 * t1 + t2 * t2 + t3 * t3 + t4 * t4);
}

double kernel_L(double u) {
    if (!(u > 1.0 + 1e-300) || !std::isfinite(u)) throw DomainError("L(u) needs u > 1");
    // log1p keeps precision for large u where (u+1)/(u-1) is close to 1.
    return std::log1p(2.0 / (u - 1.0)) / (4.0 * std::numbers::pi);
}

double kernel_J(double delta, double u) {
    if (!(delta > 1.0)) throw DomainError("J_delta needs delta > 1");
    if (!(u > 1.0)) throw DomainError("J_delta(u) needs u > 1");
    if (u >= delta) return 0.0;
    return std::max(0.0, kernel_L(u) - kernel_L(delta));
}

UpperHalfPoint reduce_to_fundamental_domain(const UpperHalfPoint& z) {
    double x = z.x(), y = z.y();
    for (int iter = 0; iter < 10000; ++iter) {
        x -= std::round(x);
        const double r2 = x * x + y * y;
        if (r2 >= 1.0 - 1e-15) return {x, y};
        // z -> -1/z
        x = -x / r2;
        y = y / r2;
    }
    throw ConvergenceError("fundamental domain reduction did not terminate");
}

}  // namespace greenbound
