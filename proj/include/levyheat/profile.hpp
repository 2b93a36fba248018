#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "levyheat/common.hpp"

namespace levyheat {

// ---------------------------------------------------------------------------
// Radial jump profile nu: (0,inf) -> (0,inf], non-increasing.
// Built-in families expose analytic derivatives and their small/large scale
// behaviour, which the singular quadratures rely on.
// ---------------------------------------------------------------------------

enum class NuFamily { stable, tempered, custom };

struct RadialProfile {
    NuFamily family = NuFamily::stable;
    int dim = 1;
    double alpha = 1.0;   // nu(s) ~ scale * s^{-dim-alpha} at the origin
    double scale = 1.0;
    double temper = 1.0;  // tempering rate (tempered family only)
    std::function<double(double)> custom;

    double value(double s) const {
        switch (family) {
            case NuFamily::stable:
                return scale * std::pow(s, -double(dim) - alpha);
            case NuFamily::tempered:
                return scale * std::pow(s, -double(dim) - alpha) * std::exp(-temper * s);
            case NuFamily::custom:
                return custom(s);
        }
        return 0.0;
    }

    // d/ds value and d2/ds2 value; finite differences for custom profiles.
    double d1(double s) const {
        double p = double(dim) + alpha;
        switch (family) {
            case NuFamily::stable:
                return -p / s * value(s);
            case NuFamily::tempered:
                return (-p / s - temper) * value(s);
            case NuFamily::custom: {
                double h = 1e-4 * s;
                return (custom(s + h) - custom(s - h)) / (2.0 * h);
            }
        }
        return 0.0;
    }

    double d2(double s) const {
        double p = double(dim) + alpha;
        switch (family) {
            case NuFamily::stable:
                return p * (p + 1.0) / (s * s) * value(s);
            case NuFamily::tempered: {
                double a = p / s + temper;
                return (a * a + p / (s * s)) * value(s);
            }
            case NuFamily::custom: {
                double h = 1e-4 * s;
                return (custom(s + h) - 2.0 * custom(s) + custom(s - h)) / (h * h);
            }
        }
        return 0.0;
    }

    // Exponent q such that nu(s) ~ c s^{-q} as s -> 0; estimated for custom.
    double origin_power() const {
        if (family != NuFamily::custom) return double(dim) + alpha;
        double s1 = 1e-7, s2 = 2e-7;
        return -std::log(custom(s2) / custom(s1)) / std::log(2.0);
    }

    bool exponential_tail() const { return family == NuFamily::tempered; }

    // Exponent q with nu(s) ~ c s^{-q} as s -> inf (power families only).
    double tail_power() const { return double(dim) + alpha; }
};

// ---------------------------------------------------------------------------
// State coefficient kappa(x, z). Built-in families are separable:
//   kappa(x,z) = sum_m a_m(x) * b_m(z),   b_m(z) = bp_m for z>0, bm_m for z<0.
// This structure is what allows the frozen-kernel tables to be shared across
// freeze points.
// ---------------------------------------------------------------------------

enum class KappaFamily {
    constant, sine, bump, cusp, sign_x, sign_split_z, sine_sign_z,
    indicator_pos_z, custom
};

struct Coefficient {
    KappaFamily family = KappaFamily::constant;
    double level = 1.0;
    double amp = 0.0;
    double wavenumber = 1.0;
    double width = 1.0;
    std::function<double(double, double)> custom;  // (x, z), 1-D

    double xpart(double x) const {
        switch (family) {
            case KappaFamily::constant: return level;
            case KappaFamily::sine: return level + amp * std::sin(wavenumber * x);
            case KappaFamily::bump: return level + amp * std::exp(-x * x / (2.0 * width * width));
            case KappaFamily::cusp: return level + amp * std::pow(std::min(std::abs(x), 1.0), width);
            case KappaFamily::sign_x: return level + amp * sgn(x);
            default: return level;
        }
    }

    double value(double x, double z) const {
        switch (family) {
            case KappaFamily::sign_split_z: return level + amp * sgn(z);
            case KappaFamily::sine_sign_z:
                return level + amp * std::sin(wavenumber * x) * (z > 0 ? 1.0 : 0.0);
            case KappaFamily::indicator_pos_z: return z > 0 ? 1.0 : 0.0;
            case KappaFamily::custom: return custom(x, z);
            default: return xpart(x);
        }
    }

    bool z_independent() const {
        switch (family) {
            case KappaFamily::constant:
            case KappaFamily::sine:
            case KappaFamily::bump:
            case KappaFamily::cusp:
            case KappaFamily::sign_x: return true;
            default: return false;
        }
    }

    bool even_in_z() const { return z_independent(); }

    bool x_independent() const {
        switch (family) {
            case KappaFamily::constant:
            case KappaFamily::sign_split_z:
            case KappaFamily::indicator_pos_z: return true;
            default: return false;
        }
    }

    struct Component {
        std::function<double(double)> a;  // x-factor
        double bp, bm;                    // z-factor on z>0 / z<0
    };

    // Separable decomposition; empty for custom coefficients.
    std::vector<Component> components() const {
        std::vector<Component> c;
        switch (family) {
            case KappaFamily::constant:
            case KappaFamily::sine:
            case KappaFamily::bump:
            case KappaFamily::cusp:
            case KappaFamily::sign_x: {
                auto self = *this;
                c.push_back({[self](double x) { return self.xpart(x); }, 1.0, 1.0});
                break;
            }
            case KappaFamily::sign_split_z:
                c.push_back({[](double) { return 1.0; }, level + amp, level - amp});
                break;
            case KappaFamily::sine_sign_z: {
                c.push_back({[l = level](double) { return l; }, 1.0, 1.0});
                c.push_back({[a = amp, k = wavenumber](double x) { return a * std::sin(k * x); }, 1.0, 0.0});
                break;
            }
            case KappaFamily::indicator_pos_z:
                c.push_back({[](double) { return 1.0; }, 1.0, 0.0});
                break;
            case KappaFamily::custom:
                break;
        }
        return c;
    }

    double lower_bound() const {
        switch (family) {
            case KappaFamily::constant: return level;
            case KappaFamily::sine: return level - std::abs(amp);
            case KappaFamily::bump: return level + std::min(0.0, amp);
            case KappaFamily::cusp: return level + std::min(0.0, amp);
            case KappaFamily::sign_x: return level - std::abs(amp);
            case KappaFamily::sign_split_z: return level - std::abs(amp);
            case KappaFamily::sine_sign_z: return level - std::abs(amp);
            case KappaFamily::indicator_pos_z: return 0.0;
            case KappaFamily::custom: return 0.0;
        }
        return 0.0;
    }

    double upper_bound() const {
        switch (family) {
            case KappaFamily::constant: return level;
            case KappaFamily::sine: return level + std::abs(amp);
            case KappaFamily::bump: return level + std::max(0.0, amp);
            case KappaFamily::cusp: return level + std::max(0.0, amp);
            case KappaFamily::sign_x: return level + std::abs(amp);
            case KappaFamily::sign_split_z: return level + std::abs(amp);
            case KappaFamily::sine_sign_z: return level + std::abs(amp);
            case KappaFamily::indicator_pos_z: return 1.0;
            case KappaFamily::custom: return 0.0;
        }
        return 0.0;
    }

    // Smallest Holder constant |k(x,.)-k(y,.)| <= kappa2 |x-y|^beta valid for
    // all increments; for an M-Lipschitz function with range R the sharp value
    // is M^beta R^{1-beta}.
    double holder_constant(double beta) const {
        auto lipschitz_range = [beta](double M, double R) {
            if (M == 0.0 || R == 0.0) return 0.0;
            return std::pow(M, beta) * std::pow(R, 1.0 - beta);
        };
        switch (family) {
            case KappaFamily::constant:
            case KappaFamily::sign_split_z:
            case KappaFamily::indicator_pos_z: return 0.0;
            case KappaFamily::sine:
                return lipschitz_range(std::abs(amp) * wavenumber, 2.0 * std::abs(amp));
            case KappaFamily::bump:
                return lipschitz_range(std::abs(amp) / (width * std::exp(0.5)), std::abs(amp));
            case KappaFamily::cusp: return std::abs(amp);  // width plays the role of beta
            case KappaFamily::sign_x: return std::abs(amp);  // nominal; genuinely not Holder
            case KappaFamily::sine_sign_z:
                return lipschitz_range(std::abs(amp) * wavenumber, 2.0 * std::abs(amp));
            case KappaFamily::custom: return 0.0;
        }
        return 0.0;
    }
};

// ---------------------------------------------------------------------------
// The operator's raw data (nu, J, kappa) with its standing constants.
// ---------------------------------------------------------------------------

struct JumpModel {
    int dim = 1;
    RadialProfile nu;
    double j_skew = 0.0;  // J(z) = nu(|z|) (1 + j_skew sgn(z)), 1-D; |j_skew| < 1
    Coefficient kappa;

    double C_J = 1.0;
    double kappa0 = 1.0, kappa1 = 1.0;
    double kappa2 = 0.0;
    double beta = 0.5;

    bool symmetric_J() const { return j_skew == 0.0; }
    bool symmetric_kappa_in_z() const { return kappa.even_in_z(); }

    double nu_at(double r) const { return nu.value(r); }

    double J_at(double z) const {
        LH_REQUIRE(dim == 1, "J_at: 1-D path");
        return nu.value(std::abs(z)) * (1.0 + j_skew * sgn(z));
    }

    double kappa_at(double x, double z) const { return kappa.value(x, z); }

    // Side multiplier of J on z = side * s, s > 0.
    double j_side(int side) const { return side > 0 ? 1.0 + j_skew : 1.0 - j_skew; }
};

// Convenience constructors for the families used throughout the tests.

inline JumpModel make_stable_model(double alpha, double nu_scale, Coefficient kappa,
                                   double beta, double j_skew = 0.0) {
    JumpModel m;
    m.dim = 1;
    m.nu = RadialProfile{NuFamily::stable, 1, alpha, nu_scale, 1.0, nullptr};
    m.j_skew = j_skew;
    m.kappa = kappa;
    m.C_J = j_skew == 0.0 ? 1.0 : std::max(1.0 + std::abs(j_skew), 1.0 / (1.0 - std::abs(j_skew)));
    m.kappa0 = kappa.lower_bound();
    m.kappa1 = kappa.upper_bound();
    m.beta = beta;
    m.kappa2 = kappa.holder_constant(beta);
    return m;
}

// The reference model with a closed-form heat kernel: J = (1/pi) |z|^{-2},
// kappa = 1, whose kernel is t / (pi (t^2 + u^2)).
inline JumpModel make_cauchy_model() {
    Coefficient c;
    c.family = KappaFamily::constant;
    c.level = 1.0;
    return make_stable_model(1.0, 1.0 / kPi, c, 0.5);
}

inline JumpModel make_sine_model(double alpha, double amp, double beta) {
    Coefficient c;
    c.family = KappaFamily::sine;
    c.level = 1.0;
    c.amp = amp;
    c.wavenumber = 1.0;
    return make_stable_model(alpha, 1.0, c, beta);
}

} // namespace levyheat
