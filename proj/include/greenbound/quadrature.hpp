#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "greenbound/error.hpp"

namespace greenbound::quad {

struct Options {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    int initial_panels = 16;
    int max_depth = 40;
    std::size_t max_evaluations = 20'000'000;
};

template <class T>
struct Result {
    T value{};
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    // false when some interval hit max_depth before meeting its local tolerance
    bool converged = true;
};

namespace detail {

template <class T>
struct Panel {
    double a, m, b;
    T fa, fm, fb;
    T whole;
    int depth;
};

template <class T>
T simpson(double a, double b, const T& fa, const T& fm, const T& fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] with Richardson correction.
/// The global tolerance max(abs_tol, rel_tol * |coarse estimate|) is shared
/// between subintervals in proportion to their length.
/// Throws ConvergenceError when max_evaluations is exhausted.
template <class T = double, class F>
Result<T> adaptive_simpson(F&& f, double a, double b, const Options& opt = {}) {
    Result<T> out;
    if (a == b) return out;
    const double sign = (b > a) ? 1.0 : -1.0;
    if (b < a) std::swap(a, b);

    const int n0 = opt.initial_panels < 1 ? 1 : opt.initial_panels;
    std::vector<detail::Panel<T>> stack;
    stack.reserve(static_cast<std::size_t>(n0) + 64);

    T coarse{};
    const double h0 = (b - a) / n0;
    T f_left = f(a);
    out.evaluations = 1;
    for (int i = 0; i < n0; ++i) {
        const double pa = a + i * h0;
        const double pb = (i + 1 == n0) ? b : a + (i + 1) * h0;
        const double pm = 0.5 * (pa + pb);
        const T fm = f(pm);
        const T fb = f(pb);
        out.evaluations += 2;
        const T s = detail::simpson(pa, pb, f_left, fm, fb);
        coarse += s;
        stack.push_back({pa, pm, pb, f_left, fm, fb, s, 0});
        f_left = fb;
    }

    const double eps = std::max(opt.abs_tol, opt.rel_tol * std::abs(coarse));
    const double width = b - a;

    // Process right-to-left so the summation order is deterministic.
    T total{};
    double err = 0.0;
    while (!stack.empty()) {
        const detail::Panel<T> p = stack.back();
        stack.pop_back();
        const double lm = 0.5 * (p.a + p.m);
        const double rm = 0.5 * (p.m + p.b);
        const T flm = f(lm);
        const T frm = f(rm);
        out.evaluations += 2;
        if (out.evaluations > opt.max_evaluations)
            throw ConvergenceError("adaptive quadrature exceeded its evaluation budget");
        const T left = detail::simpson(p.a, p.m, p.fa, flm, p.fm);
        const T right = detail::simpson(p.m, p.b, p.fm, frm, p.fb);
        const T delta = left + right - p.whole;
        const double local_tol = eps * (p.b - p.a) / width;
        const double diff = std::abs(delta);
        if (diff <= 15.0 * local_tol || p.depth >= opt.max_depth || !std::isfinite(diff)) {
            if (p.depth >= opt.max_depth && diff > 15.0 * local_tol) out.converged = false;
            total += left + right + delta / 15.0;
            err += diff / 15.0;
            continue;
        }
        stack.push_back({p.a, lm, p.m, p.fa, flm, p.fm, left, p.depth + 1});
        stack.push_back({p.m, rm, p.b, p.fm, frm, p.fb, right, p.depth + 1});
    }
    out.value = sign * total;
    out.error_estimate = err;
    return out;
}

}  // namespace greenbound::quad
