#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace levyheat {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Errors. Each failure mode carries a structured message so callers can
// surface the offending location or parameter.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct ModelEvalError : Error { using Error::Error; };
struct QuadratureFailure : Error { using Error::Error; };
struct NotALevyProfile : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct FirstMomentDivergence : Error { using Error::Error; };
struct ResolutionExceeded : Error { using Error::Error; };
struct PicardDivergence : Error { using Error::Error; };
struct HypothesisNotSatisfied : Error { using Error::Error; };
struct UnclassifiableModel : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

#define LH_REQUIRE(cond, msg) \
    do { if (!(cond)) throw ::levyheat::Error(std::string("requirement failed: ") + (msg)); } while (0)

// ---------------------------------------------------------------------------
// Small numeric helpers
// ---------------------------------------------------------------------------

inline double sqr(double x) { return x * x; }

inline int sgn(double x) { return (x > 0) - (x < 0); }

// Surface area of the unit sphere S^{d-1} in R^d.
inline double sphere_surface(int d) {
    switch (d) {
        case 1: return 2.0;
        case 2: return 2.0 * kPi;
        case 3: return 4.0 * kPi;
        default: {
            // 2 pi^{d/2} / Gamma(d/2)
            return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
        }
    }
}

// ---------------------------------------------------------------------------
// Hashing / deterministic RNG streams
// ---------------------------------------------------------------------------

inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Derive an independent stream seed for sub-task `index` of a run seeded by `seed`.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
    splitmix64(s);
    return splitmix64(s);
}

// ---------------------------------------------------------------------------
// Locale-independent float formatting (byte-stable CSV output)
// ---------------------------------------------------------------------------

inline std::string fmt_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string fmt_fixed(double v, int prec) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, prec);
    return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Deterministic parallel loop: every index writes only its own slot, threads
// take static strides, so results do not depend on the worker count.
// ---------------------------------------------------------------------------

inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                         unsigned workers = 0) {
    if (workers == 0) {
        workers = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
    }
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error = nullptr;
    std::mutex* err_mutex = new std::mutex;  // short-lived, freed below
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < n; i += workers) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(*err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    delete err_mutex;
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace levyheat
