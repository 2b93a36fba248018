#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "levyheat/grids.hpp"
#include "levyheat/profile.hpp"
#include "levyheat/quad.hpp"

namespace levyheat {

// Finite sample grids over which the standing assumptions are checked.
struct SampleSpec {
    std::vector<double> x;        // state points
    std::vector<double> z_radii;  // |z| samples
    std::vector<double> r;        // radii in (0,1]

    static SampleSpec defaults() {
        SampleSpec s;
        s.x = linspace(-4.0, 4.0, 33);
        s.z_radii = logspace(1e-4, 1e2, 41);
        s.r = logspace(1e-3, 1.0, 25);
        return s;
    }
};

struct ValidationRow {
    std::string invariant;
    bool pass = true;
    std::string witness;  // coordinates of the worst sample
    double lhs = 0.0, rhs = 0.0;
};

struct ValidationReport {
    std::vector<ValidationRow> rows;
    bool passed() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

namespace detail {

inline double checked_eval(double v, const std::string& what, const std::string& where) {
    if (!std::isfinite(v))
        throw ModelEvalError("model evaluation error: " + what + " non-finite at " + where);
    return v;
}

} // namespace detail

// Levy integrability integral int (1 ^ |z|^2) nu(|z|) dz, 1-D, with the tail
// beyond the truncation radius majorized by a monotone upper sum on dyadic
// shells. Throws NotALevyProfile if either part fails to converge.
inline double levy_integral(const JumpModel& m, double truncation = 1e2) {
    const double surf = sphere_surface(m.dim);
    auto inner_f = [&](double s) {
        return detail::checked_eval(m.nu_at(s), "nu", "r=" + fmt_double(s)) *
               std::pow(s, m.dim + 1);
    };
    double inner = geometric_down(inner_f, 1.0, 1e-12, 80);
    // remainder below the last edge, assuming the local power continues
    {
        double e = 1.0 * std::pow(0.5, 80);  // only used if no early stop; recompute edge
        double edge;
        inner = geometric_down(inner_f, 1.0, 1e-12, 80, &edge);
        e = edge;
        double p = m.nu.origin_power();
        if (m.dim + 2.0 - p <= 1e-9)
            throw NotALevyProfile("not a Levy profile: int |z|^2 nu diverges at the origin");
        inner += m.nu_at(e) * std::pow(e, m.dim + 2) / (m.dim + 2.0 - p);
    }
    auto outer_f = [&](double s) {
        return detail::checked_eval(m.nu_at(s), "nu", "r=" + fmt_double(s)) *
               std::pow(s, m.dim - 1);
    };
    double outer = 0.0;
    double lo = 1.0;
    while (lo < truncation) {
        double hi = std::min(2.0 * lo, truncation);
        outer += gauss8(outer_f, lo, hi);
        lo = hi;
    }
    // dyadic monotone upper bound past the truncation radius
    double tail = 0.0;
    double R = truncation;
    for (int k = 0; k < 64; ++k) {
        double shell = m.nu_at(R) * (std::pow(2.0 * R, m.dim) - std::pow(R, m.dim)) / m.dim;
        tail += shell;
        R *= 2.0;
        if (shell < 1e-12 * (outer + tail + inner)) break;
        if (k == 63)
            throw NotALevyProfile("not a Levy profile: tail of nu does not integrate");
    }
    return surf * (inner + outer + tail);
}

inline ValidationReport validate_model(const JumpModel& m,
                                       const SampleSpec& spec = SampleSpec::defaults()) {
    LH_REQUIRE(m.dim == 1, "validate_model: 1-D models only");
    ValidationReport rep;

    // nu non-increasing
    {
        ValidationRow row{"nu_monotone", true, "", 0, 0};
        double worst = -1.0;
        for (std::size_t i = 0; i + 1 < spec.z_radii.size(); ++i) {
            double r1 = spec.z_radii[i], r2 = spec.z_radii[i + 1];
            double v1 = detail::checked_eval(m.nu_at(r1), "nu", "r=" + fmt_double(r1));
            double v2 = detail::checked_eval(m.nu_at(r2), "nu", "r=" + fmt_double(r2));
            double gap = v2 - v1;  // positive = violation
            if (gap > worst) {
                worst = gap;
                row.witness = "r1=" + fmt_double(r1) + " r2=" + fmt_double(r2);
                row.lhs = v1;
                row.rhs = v2;
            }
        }
        row.pass = worst <= 1e-12 * std::abs(row.lhs);
        rep.rows.push_back(row);
    }

    // Levy integrability
    {
        ValidationRow row{"levy_integrability", true, "", 0, 0};
        try {
            row.lhs = levy_integral(m);
            row.rhs = std::numeric_limits<double>::infinity();
            row.pass = std::isfinite(row.lhs);
        } catch (const NotALevyProfile& e) {
            row.pass = false;
            row.witness = e.what();
        }
        rep.rows.push_back(row);
    }

    // J comparability with C_J
    {
        ValidationRow row{"j_comparability", true, "", 0, 0};
        double worst = 0.0;
        for (double s : spec.z_radii) {
            for (int side : {-1, 1}) {
                double z = side * s;
                double nu = m.nu_at(s);
                double j = detail::checked_eval(m.J_at(z), "J", "z=" + fmt_double(z));
                double excess = std::max(j - m.C_J * nu, nu / m.C_J - j);
                if (excess > worst) {
                    worst = excess;
                    row.witness = "z=" + fmt_double(z);
                    row.lhs = j;
                    row.rhs = nu;
                }
            }
        }
        row.pass = worst <= 1e-10 * std::max(1.0, std::abs(row.rhs));
        rep.rows.push_back(row);
    }

    // kappa bounds
    {
        ValidationRow row{"kappa_bounds", true, "", 0, 0};
        double worst = 0.0;
        for (double x : spec.x) {
            for (double s : spec.z_radii) {
                for (int side : {-1, 1}) {
                    double z = side * s;
                    double k = detail::checked_eval(
                        m.kappa_at(x, z), "kappa",
                        "x=" + fmt_double(x) + " z=" + fmt_double(z));
                    double excess = std::max(k - m.kappa1, m.kappa0 - k);
                    if (excess > worst) {
                        worst = excess;
                        row.witness = "x=" + fmt_double(x) + " z=" + fmt_double(z);
                        row.lhs = k;
                        row.rhs = excess == k - m.kappa1 ? m.kappa1 : m.kappa0;
                    }
                }
            }
        }
        row.pass = worst <= 1e-12 * std::max(1.0, m.kappa1);
        rep.rows.push_back(row);
    }

    // kappa Holder continuity in x
    {
        ValidationRow row{"kappa_holder", true, "", 0, 0};
        double worst = 0.0;
        for (std::size_t i = 0; i < spec.x.size(); ++i) {
            for (std::size_t j = i + 1; j < spec.x.size(); ++j) {
                double x = spec.x[i], y = spec.x[j];
                double bound = m.kappa2 * std::pow(std::abs(x - y), m.beta);
                for (double s : spec.z_radii) {
                    for (int side : {-1, 1}) {
                        double z = side * s;
                        double diff = std::abs(m.kappa_at(x, z) - m.kappa_at(y, z));
                        double excess = diff - bound;
                        if (excess > worst) {
                            worst = excess;
                            row.witness = "x=" + fmt_double(x) + " y=" + fmt_double(y) +
                                          " z=" + fmt_double(z);
                            row.lhs = diff;
                            row.rhs = bound;
                        }
                    }
                }
            }
        }
        row.pass = worst <= 1e-10 * std::max(1.0, m.kappa2);
        rep.rows.push_back(row);
    }

    return rep;
}

// int_{r <= |z| < 1} z kappa(x,z) J(z) dz, 1-D. The two half-lines are paired
// so a symmetric integrand yields exactly zero.
inline double criticality_integral(const JumpModel& m, double x, double r, double tol = 1e-10) {
    LH_REQUIRE(m.dim == 1, "criticality_integral: 1-D models only");
    LH_REQUIRE(r > 0.0 && r <= 1.0, "criticality_integral needs r in (0,1]");
    if (r == 1.0) return 0.0;
    auto f = [&](double s) {
        double plus = m.kappa_at(x, s) * m.J_at(s);
        double minus = m.kappa_at(x, -s) * m.J_at(-s);
        return s * (plus - minus);
    };
    auto run = [&](int panels) {
        auto edges = logspace(r, 1.0, panels + 1);
        double acc = 0.0;
        for (int k = 0; k < panels; ++k) acc += gauss8(f, edges[k], edges[k + 1]);
        return acc;
    };
    double coarse = run(8), fine = run(16);
    double err = std::abs(fine - coarse);
    if (err > tol * std::max(1.0, std::abs(fine)) && err > tol)
        throw QuadratureFailure("quadrature failure: criticality integral error " +
                                fmt_double(err) + " above tolerance at x=" + fmt_double(x) +
                                " r=" + fmt_double(r));
    return fine;
}

} // namespace levyheat
