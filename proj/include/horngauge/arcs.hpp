// Finite Puiseux-type arcs with exact rational exponents: valuations,
// orders of contact, and the log-log regression used as the numeric
// surrogate for valuations of sampled quantities.
#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "horngauge/common.hpp"
#include "horngauge/errors.hpp"
#include "horngauge/rational.hpp"

namespace horngauge {

// nullopt is the +infinity sentinel (valuation of the zero series)
using Valuation = std::optional<Rational>;

class PuiseuxSeries {
public:
    PuiseuxSeries() = default;
    explicit PuiseuxSeries(std::vector<std::pair<Rational, Complex>> terms);

    static PuiseuxSeries monomial(Rational exponent, Complex coeff);

    const std::vector<std::pair<Rational, Complex>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // t^{p/q} is the positive real root; t > 0
    Complex eval(double t) const;

private:
    std::vector<std::pair<Rational, Complex>> terms_;  // exponents strictly increasing
};

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);

Valuation series_valuation(const PuiseuxSeries& s);

// Coordinate arc through the origin: every exponent positive, at least one
// coordinate series nonzero.
struct PuiseuxArc {
    PuiseuxSeries x, y, z;

    PuiseuxArc(PuiseuxSeries px, PuiseuxSeries py, PuiseuxSeries pz);
};

C3 arc_eval(const PuiseuxArc& g, double t);

// valuation of ||g(t)||; 1 means the arc is parameterized by distance to
// first order (reported by callers as a warning when it is not)
Valuation arc_valuation(const PuiseuxArc& g);

// Valuation of ||g1(t) - g2(t)||, exact: the squared norm is a sum of
// squared coordinate moduli, so cancellation can only happen inside a
// coordinate, which exact series subtraction accounts for.
Valuation contact_order(const PuiseuxArc& g1, const PuiseuxArc& g2);

struct FitResult {
    double exponent = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    int n_points = 0;
    int n_dropped = 0;
    bool valid = false;
};

struct FitOptions {
    double r2_gate = 0.99;
    double abs_floor = 1e-14;  // samples with v <= floor are dropped
    int min_points = 8;
};

// Least-squares slope of log v against log t. Samples with non-positive v
// or v <= abs_floor are dropped (and counted); the fit is invalid when
// fewer than min_points survive or r^2 misses the gate.
FitResult fit_valuation(const std::vector<std::pair<double, double>>& samples,
                        const FitOptions& opt = {});
inline FitResult fit_valuation(const std::vector<std::pair<double, double>>& samples,
                               double gate) {
    FitOptions o;
    o.r2_gate = gate;
    return fit_valuation(samples, o);
}

using ArcEvaluator = std::function<C3(double)>;

// fit of t -> ||e1(t) - e2(t)|| on a geometric grid of n points
FitResult numeric_contact_order(const ArcEvaluator& e1, const ArcEvaluator& e2,
                                double t_lo, double t_hi, int n,
                                const FitOptions& opt = {});

struct PairContact {
    int i = 0, j = 0;
    FitResult fit;
};

struct ContactScan {
    double min_exponent = 0.0;
    bool any_valid = false;
    std::vector<PairContact> pairs;
};

// Pairwise contact fits over a family of arcs; every evaluator is sampled
// once on the shared grid and pairs are fitted from the cached samples.
ContactScan contact_scan(const std::vector<ArcEvaluator>& arcs, double t_lo,
                         double t_hi, int n, const FitOptions& opt = {});

// minimum valid pairwise exponent — the sampled estimate of the horn
// exponent of the surface swept by the family; throws NoValidFit when every
// pairwise fit is invalid
double horn_exponent_from_family(const std::vector<ArcEvaluator>& arcs,
                                 double t_lo, double t_hi, int n,
                                 const FitOptions& opt = {});

}  // namespace horngauge
