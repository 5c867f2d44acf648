// Shared numeric primitives: complex 3-vectors, stable log-sum-exp,
// seeded RNG streams, grids and a slot-based parallel loop.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace horngauge {

using Complex = std::complex<double>;
using C3 = std::array<Complex, 3>;

inline C3 operator+(const C3& a, const C3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline C3 operator-(const C3& a, const C3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline C3 operator*(double s, const C3& a) {
    return {s * a[0], s * a[1], s * a[2]};
}

inline C3& operator+=(C3& a, const C3& b) {
    a[0] += b[0];
    a[1] += b[1];
    a[2] += b[2];
    return a;
}

inline double norm_sq(const C3& a) {
    return std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]);
}

inline double norm(const C3& a) { return std::sqrt(norm_sq(a)); }

inline double norm_inf(const C3& a) {
    return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

inline std::array<double, 6> to_r6(const C3& a) {
    return {a[0].real(), a[0].imag(), a[1].real(),
            a[1].imag(), a[2].real(), a[2].imag()};
}

// log(sum_i exp(args[i])) without forming the exponentials
inline double log_sum_exp(const std::vector<double>& args) {
    double m = *std::max_element(args.begin(), args.end());
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (double a : args) s += std::exp(a - m);
    return m + std::log(s);
}

// SplitMix64; used to derive independent seed streams from one user seed
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream));
}

// n points, logarithmically even, lo and hi included
inline std::vector<double> geometric_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] =
            std::exp(llo + (lhi - llo) * i / (n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

inline double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Index-parallel loop. Each index writes only its own preallocated slot,
// so results are independent of thread scheduling. The first exception is
// rethrown after all workers join.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (std::size_t i = t; i < n; i += nt) fn(i);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace horngauge
