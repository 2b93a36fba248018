#pragma once

#include <cmath>
#include <vector>

#include "levyheat/common.hpp"

namespace levyheat {

inline std::vector<double> linspace(double a, double b, int n) {
    LH_REQUIRE(n >= 2, "linspace needs n >= 2");
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

inline std::vector<double> logspace(double a, double b, int n) {
    LH_REQUIRE(a > 0 && b > 0, "logspace needs positive endpoints");
    std::vector<double> v = linspace(std::log(a), std::log(b), n);
    for (double& x : v) x = std::exp(x);
    return v;
}

// Symmetric grading map w:[0,1]->[0,1] with w ~ u^p near 0 and 1-(1-u)^p near 1.
inline double graded_map(double u, double p) {
    double a = std::pow(u, p);
    double b = std::pow(1.0 - u, p);
    return a / (a + b);
}

// Time nodes on [0,t] clustered quadratically (exponent p) toward both endpoints.
inline std::vector<double> graded_time_nodes(double t, int n, double p) {
    LH_REQUIRE(n >= 2, "need at least two time nodes");
    LH_REQUIRE(p > 1.0, "grading exponent must exceed 1");
    std::vector<double> s(n + 1);
    for (int i = 0; i <= n; ++i) s[i] = t * graded_map(double(i) / n, p);
    return s;
}

// Trapezoid weights for arbitrary sorted nodes.
inline std::vector<double> trapezoid_weights(const std::vector<double>& x) {
    std::size_t n = x.size();
    std::vector<double> w(n, 0.0);
    if (n < 2) return w;
    w[0] = 0.5 * (x[1] - x[0]);
    w[n - 1] = 0.5 * (x[n - 1] - x[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i) w[i] = 0.5 * (x[i + 1] - x[i - 1]);
    return w;
}

// Symmetric grid around 0: uniform core [-core, core] with spacing dx, then
// spacing stretched geometrically until |x| reaches L. Used for wide y-grids.
inline std::vector<double> stretched_grid(double core, double dx, double stretch, double L) {
    LH_REQUIRE(core > 0 && dx > 0 && stretch > 1.0 && L >= core, "bad stretched_grid spec");
    std::vector<double> right;
    double x = 0.0;
    double h = dx;
    while (x < L) {
        x += h;
        if (x > core) h *= stretch;
        right.push_back(std::min(x, L));
        if (right.size() > 100000) throw Error("stretched_grid: too many nodes");
    }
    std::vector<double> g;
    g.reserve(2 * right.size() + 1);
    for (auto it = right.rbegin(); it != right.rend(); ++it) g.push_back(-*it);
    g.push_back(0.0);
    for (double v : right) g.push_back(v);
    return g;
}

struct Grid1 {
    std::vector<double> nodes;
    std::vector<double> weights;  // trapezoid

    static Grid1 from_nodes(std::vector<double> n) {
        Grid1 g;
        g.weights = trapezoid_weights(n);
        g.nodes = std::move(n);
        return g;
    }
    std::size_t size() const { return nodes.size(); }
};

} // namespace levyheat
