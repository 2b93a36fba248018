#pragma once

#include <cmath>
#include <vector>

#include "levyheat/common.hpp"

namespace levyheat {

// ---------------------------------------------------------------------------
// Cubic interpolation on a uniform grid (4-point Lagrange). O(dx^4) accurate
// in the interior; clamps to linear at the edges.
// ---------------------------------------------------------------------------
struct UniformTable {
    double u0 = 0.0;
    double du = 1.0;
    std::vector<double> v;

    bool empty() const { return v.empty(); }
    double front_u() const { return u0; }
    double back_u() const { return u0 + du * (double(v.size()) - 1.0); }

    bool covers(double u) const { return u >= u0 && u <= back_u(); }

    double eval(double u) const {
        const std::size_t n = v.size();
        if (n == 0) return 0.0;
        if (n == 1) return v[0];
        double s = (u - u0) / du;
        if (s <= 0.0) return v[0];
        if (s >= double(n - 1)) return v[n - 1];
        std::size_t j = std::size_t(s);
        if (j == 0) j = 1;
        if (j + 2 >= n) j = n - 3;
        // nodes j-1, j, j+1, j+2
        double x = s - double(j);  // in [0,1) ideally
        double vm = v[j - 1], v0 = v[j], v1 = v[j + 1], v2 = v[j + 2];
        double c0 = v0;
        double c1 = 0.5 * (v1 - vm);
        double c2 = vm - 2.5 * v0 + 2.0 * v1 - 0.5 * v2;
        double c3 = 0.5 * (v2 - vm) + 1.5 * (v0 - v1);
        return c0 + x * (c1 + x * (c2 + x * c3));
    }
};

// ---------------------------------------------------------------------------
// Local cubic (4-point Lagrange) on an arbitrary sorted grid.
// ---------------------------------------------------------------------------
struct CubicTable {
    std::vector<double> x, y;

    void build(std::vector<double> xs, std::vector<double> ys) {
        LH_REQUIRE(xs.size() == ys.size() && xs.size() >= 2, "CubicTable needs matched arrays");
        x = std::move(xs);
        y = std::move(ys);
    }

    double eval(double xi) const {
        const std::size_t n = x.size();
        if (xi <= x.front()) return y.front();
        if (xi >= x.back()) return y.back();
        std::size_t j = std::upper_bound(x.begin(), x.end(), xi) - x.begin();
        // xi in [x[j-1], x[j])
        std::size_t a = (j >= 2) ? j - 2 : 0;
        if (a + 3 >= n) a = n - 4;
        double r = 0.0;
        for (std::size_t k = a; k < a + 4; ++k) {
            double L = 1.0;
            for (std::size_t m = a; m < a + 4; ++m) {
                if (m == k) continue;
                L *= (xi - x[m]) / (x[k] - x[m]);
            }
            r += L * y[k];
        }
        return r;
    }
};

// ---------------------------------------------------------------------------
// Monotone cubic (Steffen 1990): shape-preserving, C^1. Used for h, h^{-1}
// and other monotone tables where overshoot is unacceptable.
// ---------------------------------------------------------------------------
struct MonotoneCubic {
    std::vector<double> x, y, dy;  // node slopes

    void build(std::vector<double> xs, std::vector<double> ys) {
        LH_REQUIRE(xs.size() == ys.size() && xs.size() >= 2, "MonotoneCubic needs matched arrays");
        x = std::move(xs);
        y = std::move(ys);
        const std::size_t n = x.size();
        dy.assign(n, 0.0);
        std::vector<double> h(n - 1), s(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            h[i] = x[i + 1] - x[i];
            s[i] = (y[i + 1] - y[i]) / h[i];
        }
        dy[0] = s[0];
        dy[n - 1] = s[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            double p = (s[i - 1] * h[i] + s[i] * h[i - 1]) / (h[i - 1] + h[i]);
            double lim = 2.0 * std::min(std::abs(s[i - 1]), std::abs(s[i]));
            if (s[i - 1] * s[i] <= 0.0) {
                dy[i] = 0.0;
            } else if (std::abs(p) > lim) {
                dy[i] = lim * sgn(p);
            } else {
                dy[i] = p;
            }
        }
    }

    double eval(double xi) const {
        const std::size_t n = x.size();
        if (xi <= x.front()) return y.front() + dy.front() * (xi - x.front());
        if (xi >= x.back()) return y.back() + dy.back() * (xi - x.back());
        std::size_t j = std::upper_bound(x.begin(), x.end(), xi) - x.begin() - 1;
        double h = x[j + 1] - x[j];
        double t = (xi - x[j]) / h;
        double a = y[j], b = dy[j] * h;
        double c = 3.0 * (y[j + 1] - y[j]) - (2.0 * dy[j] + dy[j + 1]) * h;
        double d = 2.0 * (y[j] - y[j + 1]) + (dy[j] + dy[j + 1]) * h;
        return a + t * (b + t * (c + t * d));
    }
};

} // namespace levyheat
