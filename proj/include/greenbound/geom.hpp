#pragma once

#include <cstdint>

namespace greenbound {

/// Point x + iy of the upper half-plane.
class UpperHalfPoint {
public:
    /// Throws DomainError unless y > 0 and both coordinates are finite.
    UpperHalfPoint(double x, double y);

    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }

    friend bool operator==(const UpperHalfPoint&, const UpperHalfPoint&) = default;

private:
    double x_;
    double y_;
};

/// Integer matrix (a b; c d) with ad - bc = 1.
class UnimodularMatrix {
public:
    /// Throws DomainError if the determinant is not 1.
    UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    static UnimodularMatrix identity() { return {1, 0, 0, 1}; }

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t d() const noexcept { return d_; }

    UnimodularMatrix negated() const { return {-a_, -b_, -c_, -d_}; }

    friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

private:
    std::int64_t a_, b_, c_, d_;
};

/// Axis-aligned rectangle [x_min, x_max] x [y_min, y_max] in H.
class Rectangle {
public:
    /// Throws DomainError unless x_min <= x_max and 0 < y_min <= y_max.
    Rectangle(double x_min, double x_max, double y_min, double y_max);

    /// Degenerate rectangle containing only z.
    static Rectangle at(const UpperHalfPoint& z) { return {z.x(), z.x(), z.y(), z.y()}; }

    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    double y_min() const noexcept { return y_min_; }
    double y_max() const noexcept { return y_max_; }

    bool contains(const UpperHalfPoint& z) const noexcept;

    /// Cell (i, j) of the regular nx-by-ny subdivision; i indexes x, j indexes y.
    Rectangle cell(int i, int j, int nx, int ny) const;

    friend bool operator==(const Rectangle&, const Rectangle&) = default;

private:
    double x_min_, x_max_, y_min_, y_max_;
};

/// u(z, w) = cosh of the hyperbolic distance = 1 + |z - w|^2 / (2 Im z Im w).
double point_u(const UpperHalfPoint& z, const UpperHalfPoint& w) noexcept;

/// (a z + b) / (c z + d).
UpperHalfPoint mobius_apply(const UnimodularMatrix& g, const UpperHalfPoint& z);

/// u(z, g z) from the closed form in the matrix entries; agrees with
/// point_u(z, mobius_apply(g, z)) but avoids the division by |cz + d|^2.
double u_of_gamma(const UnimodularMatrix& g, const UpperHalfPoint& z) noexcept;

/// Free-space Green kernel L(u) = log((u + 1)/(u - 1)) / (4 pi). Throws for u <= 1.
double kernel_L(double u);

/// J_delta(u) = max(0, L(u) - L(delta)).
double kernel_J(double delta, double u);

/// Representative of the SL2(Z)-orbit of z in the standard fundamental domain
/// |Re z| <= 1/2, |z| >= 1.
UpperHalfPoint reduce_to_fundamental_domain(const UpperHalfPoint& z);

}  // namespace greenbound
