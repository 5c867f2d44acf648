// Sparse complex polynomials in three variables with weighted-degree
// bookkeeping: the split f = h + theta, weight systems with their derived
// exponents, the Euler identity residual and the isolated-singularity probe.
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>

#include "horngauge/common.hpp"
#include "horngauge/errors.hpp"

namespace horngauge {

// Weights in canonical order w1 >= w2 >= w3 >= 1 together with the weighted
// degree d > w1 and the derived gradient exponents. `perm` records which
// user variable landed in each canonical slot (canonical i <- user perm[i]).
struct WeightSystem {
    std::array<long, 3> w{};
    long d = 0;
    std::array<long, 3> alpha{};  // alpha_a, alpha_b, alpha_c
    long k = 0;                   // (d-w1)(d-w2)(d-w3); N*h scales as t^{2k}
    std::array<int, 3> perm{0, 1, 2};

    WeightSystem(const std::array<long, 3>& user_w, long degree);

    long w1() const { return w[0]; }
    long w2() const { return w[1]; }
    long w3() const { return w[2]; }
};

struct Monomial {
    std::array<int, 3> e{};

    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    int total_degree() const { return e[0] + e[1] + e[2]; }
};

// guard against pathological exponent input
inline constexpr int kMaxTotalDegree = 512;

class Polynomial {
public:
    Polynomial() = default;

    // accumulates; erases the term when the coefficient cancels to zero
    void add_term(const Monomial& m, Complex c);

    const std::map<Monomial, Complex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Complex eval(const C3& X) const;

    // sum_m |c_m| |x|^e1 |y|^e2 |z|^e3 — the natural magnitude of the
    // evaluation, used as the denominator of relative residuals
    double eval_scale(const C3& X) const;

    int max_exponent(int var) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);

private:
    std::map<Monomial, Complex> terms_;
};

long weighted_degree(const Monomial& m, const std::array<long, 3>& w);
inline long weighted_degree(const Monomial& m, const WeightSystem& ws) {
    return weighted_degree(m, ws.w);
}

std::array<Polynomial, 3> grad(const Polynomial& f);

// f permuted into canonical variable order and split as h + theta with
// every h-term of weighted degree exactly d and every theta-term above d.
struct SWHPolynomial {
    Polynomial h;
    Polynomial theta;
    WeightSystem weights;
};

// When d is absent it is inferred as the minimum weighted degree over the
// terms of f. Throws DegreeConflict if a term falls below a supplied d and
// EmptyHomogeneousPart if no term attains d.
SWHPolynomial decompose(const Polynomial& f, const std::array<long, 3>& user_weights,
                        std::optional<long> d = std::nullopt);

// |w1 x h_x + w2 y h_y + w3 z h_z - d h(X)|, zero to rounding iff every
// term of h has weighted degree d
double euler_residual(const Polynomial& h, const WeightSystem& ws, const C3& X);

struct ProbeReport {
    double min_grad_sq = 0.0;
    C3 argmin{};
    bool possibly_non_isolated = false;
    int n_samples = 0;
    double threshold = 0.0;
};

// Descent on |grad h|^2 from seeded starts on the unit sphere. Report-only:
// flags POSSIBLY_NON_ISOLATED when the minimum found drops below the
// threshold, proves nothing either way.
ProbeReport singularity_probe(const Polynomial& h, const WeightSystem& ws,
                              int n_samples, std::uint64_t seed,
                              double threshold = 1e-8, int threads = 1);

}  // namespace horngauge
