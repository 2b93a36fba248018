#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "levyheat/common.hpp"

namespace levyheat {

// 8-point Gauss-Legendre rule on [-1,1].
inline constexpr std::array<double, 8> kGauss8X = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
     0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
inline constexpr std::array<double, 8> kGauss8W = {
     0.1012285362903763,  0.2223810344533745,  0.3137066458778873,  0.3626837833783620,
     0.3626837833783620,  0.3137066458778873,  0.2223810344533745,  0.1012285362903763};

// 16-point Gauss-Legendre rule on [-1,1] (used by test oracles and the
// high-accuracy branch of tail integrals).
inline constexpr std::array<double, 16> kGauss16X = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
     0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
     0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
inline constexpr std::array<double, 16> kGauss16W = {
     0.0271524594117541,  0.0622535239386479,  0.0951585116824928,  0.1246289712555339,
     0.1495959888165767,  0.1691565193950025,  0.1826034150449236,  0.1894506104550685,
     0.1894506104550685,  0.1826034150449236,  0.1691565193950025,  0.1495959888165767,
     0.1246289712555339,  0.0951585116824928,  0.0622535239386479,  0.0271524594117541};

template <class F>
double gauss8(const F& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += kGauss8W[i] * f(c + h * kGauss8X[i]);
    return s * h;
}

template <class F>
double gauss16(const F& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 16; ++i) s += kGauss16W[i] * f(c + h * kGauss16X[i]);
    return s * h;
}

// Composite geometric panels from b down toward 0 (panels [b/2,b], [b/4,b/2], ...).
// Stops when a panel contributes less than rel_tol of the accumulated value or
// max_panels is reached. Returns the sum; *last_edge receives the lowest edge.
template <class F>
double geometric_down(const F& f, double b, double rel_tol, int max_panels,
                      double* last_edge = nullptr) {
    double hi = b, acc = 0.0;
    int k = 0;
    for (; k < max_panels; ++k) {
        double lo = 0.5 * hi;
        double p = gauss8(f, lo, hi);
        acc += p;
        hi = lo;
        if (std::abs(p) < rel_tol * std::abs(acc) && k > 4) break;
    }
    if (last_edge) *last_edge = hi;
    return acc;
}

// Composite geometric panels upward from a (panels [a,2a], [2a,4a], ...).
template <class F>
double geometric_up(const F& f, double a, double rel_tol, int max_panels,
                    double* last_edge = nullptr) {
    double lo = a, acc = 0.0;
    int k = 0;
    for (; k < max_panels; ++k) {
        double hi = 2.0 * lo;
        double p = gauss8(f, lo, hi);
        acc += p;
        lo = hi;
        if (std::abs(p) < rel_tol * std::abs(acc) && k > 4) break;
    }
    if (last_edge) *last_edge = lo;
    return acc;
}

// Adaptive Simpson with absolute tolerance; throws QuadratureFailure when the
// recursion cannot meet it.
namespace detail {
template <class F>
double simpson(const F& f, double a, double fa, double b, double fb, double fm) {
    return (b - a) * (fa + 4.0 * fm + fb) / 6.0;
}
template <class F>
double adsimp(const F& f, double a, double fa, double b, double fb, double fm,
              double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) * (fa + 4.0 * flm + fm) / 6.0;
    double right = (b - m) * (fm + 4.0 * frm + fb) / 6.0;
    double delta = left + right - whole;
    if (depth <= 0) {
        if (std::abs(delta) > 15.0 * tol)
            throw QuadratureFailure("quadrature failure: adaptive Simpson depth exhausted");
        return left + right + delta / 15.0;
    }
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adsimp(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           adsimp(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}
} // namespace detail

template <class F>
double adaptive_simpson(const F& f, double a, double b, double abs_tol, int max_depth = 40) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0;
    return detail::adsimp(f, a, fa, b, fb, fm, whole, abs_tol, max_depth);
}

} // namespace levyheat
