#include "horngauge/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace horngauge {

PuiseuxSeries::PuiseuxSeries(std::vector<std::pair<Rational, Complex>> terms) {
    std::map<Rational, Complex> acc;
    for (auto& [e, c] : terms) acc[e] += c;
    terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != Complex{}) terms_.emplace_back(e, c);
}

PuiseuxSeries PuiseuxSeries::monomial(Rational exponent, Complex coeff) {
    PuiseuxSeries s;
    if (coeff != Complex{}) s.terms_.emplace_back(exponent, coeff);
    return s;
}

Complex PuiseuxSeries::eval(double t) const {
    Complex acc{};
    for (const auto& [e, c] : terms_) acc += c * std::pow(t, e.value());
    return acc;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    auto terms = a.terms();
    for (const auto& tc : b.terms()) terms.push_back(tc);
    return PuiseuxSeries(std::move(terms));
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    auto terms = a.terms();
    for (const auto& [e, c] : b.terms()) terms.emplace_back(e, -c);
    return PuiseuxSeries(std::move(terms));
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    std::vector<std::pair<Rational, Complex>> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) terms.emplace_back(ea + eb, ca * cb);
    return PuiseuxSeries(std::move(terms));
}

Valuation series_valuation(const PuiseuxSeries& s) {
    if (s.is_zero()) return std::nullopt;
    return s.terms().front().first;
}

PuiseuxArc::PuiseuxArc(PuiseuxSeries px, PuiseuxSeries py, PuiseuxSeries pz)
    : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {
    if (x.is_zero() && y.is_zero() && z.is_zero())
        throw InputError("arc must have a nonzero coordinate");
    for (const PuiseuxSeries* s : {&x, &y, &z})
        for (const auto& [e, c] : s->terms())
            if (!(Rational(0) < e))
                throw InputError("arc exponents must be strictly positive");
}

C3 arc_eval(const PuiseuxArc& g, double t) {
    return {g.x.eval(t), g.y.eval(t), g.z.eval(t)};
}

namespace {

Valuation min_valuation(Valuation a, Valuation b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
}

}  // namespace

Valuation arc_valuation(const PuiseuxArc& g) {
    Valuation v = series_valuation(g.x);
    v = min_valuation(v, series_valuation(g.y));
    v = min_valuation(v, series_valuation(g.z));
    return v;
}

Valuation contact_order(const PuiseuxArc& g1, const PuiseuxArc& g2) {
    Valuation v = series_valuation(g1.x - g2.x);
    v = min_valuation(v, series_valuation(g1.y - g2.y));
    v = min_valuation(v, series_valuation(g1.z - g2.z));
    return v;
}

FitResult fit_valuation(const std::vector<std::pair<double, double>>& samples,
                        const FitOptions& opt) {
    if (static_cast<int>(samples.size()) < opt.min_points)
        throw InsufficientSamples("fit needs at least " +
                                  std::to_string(opt.min_points) + " samples, got " +
                                  std::to_string(samples.size()));

    FitResult r;
    std::vector<std::pair<double, double>> logs;
    logs.reserve(samples.size());
    for (const auto& [t, v] : samples) {
        if (t <= 0.0) throw InputError("fit abscissae must be positive");
        if (!(v > opt.abs_floor) || !std::isfinite(v)) {
            ++r.n_dropped;
            continue;
        }
        logs.emplace_back(std::log(t), std::log(v));
        if (r.n_points == 0) {
            r.window_lo = t;
            r.window_hi = t;
        }
        r.window_lo = std::min(r.window_lo, t);
        r.window_hi = std::max(r.window_hi, t);
        ++r.n_points;
    }
    if (r.n_points < 2) return r;  // invalid; nothing to regress

    double sx = 0, sy = 0;
    for (const auto& [lx, ly] : logs) {
        sx += lx;
        sy += ly;
    }
    const double mx = sx / r.n_points, my = sy / r.n_points;
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [lx, ly] : logs) {
        sxx += (lx - mx) * (lx - mx);
        sxy += (lx - mx) * (ly - my);
        syy += (ly - my) * (ly - my);
    }
    if (sxx < 1e-30) return r;  // degenerate window
    r.exponent = sxy / sxx;
    r.intercept = my - r.exponent * mx;
    if (syy < 1e-30) {
        // flat data is fit exactly by slope 0
        r.r_squared = 1.0;
    } else {
        r.r_squared = (sxy * sxy) / (sxx * syy);
    }
    r.valid = r.r_squared >= opt.r2_gate && r.n_points >= opt.min_points;
    return r;
}

FitResult numeric_contact_order(const ArcEvaluator& e1, const ArcEvaluator& e2,
                                double t_lo, double t_hi, int n,
                                const FitOptions& opt) {
    std::vector<std::pair<double, double>> samples;
    samples.reserve(n);
    for (double t : geometric_grid(t_lo, t_hi, n))
        samples.emplace_back(t, norm(e1(t) - e2(t)));
    return fit_valuation(samples, opt);
}

ContactScan contact_scan(const std::vector<ArcEvaluator>& arcs, double t_lo,
                         double t_hi, int n, const FitOptions& opt) {
    if (arcs.size() < 2) throw InputError("contact scan needs at least two arcs");
    const auto grid = geometric_grid(t_lo, t_hi, n);
    std::vector<std::vector<C3>> cache(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        cache[i].reserve(grid.size());
        for (double t : grid) cache[i].push_back(arcs[i](t));
    }

    ContactScan scan;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            std::vector<std::pair<double, double>> samples;
            samples.reserve(grid.size());
            for (std::size_t s = 0; s < grid.size(); ++s)
                samples.emplace_back(grid[s], norm(cache[i][s] - cache[j][s]));
            PairContact pc;
            pc.i = static_cast<int>(i);
            pc.j = static_cast<int>(j);
            pc.fit = fit_valuation(samples, opt);
            if (pc.fit.valid &&
                (!scan.any_valid || pc.fit.exponent < scan.min_exponent)) {
                scan.min_exponent = pc.fit.exponent;
                scan.any_valid = true;
            }
            scan.pairs.push_back(std::move(pc));
        }
    }
    return scan;
}

double horn_exponent_from_family(const std::vector<ArcEvaluator>& arcs, double t_lo,
                                 double t_hi, int n, const FitOptions& opt) {
    const ContactScan scan = contact_scan(arcs, t_lo, t_hi, n, opt);
    if (!scan.any_valid)
        throw NoValidFit("every pairwise contact fit was invalid");
    return scan.min_exponent;
}

}  // namespace horngauge
