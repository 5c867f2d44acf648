#include "horngauge/wpoly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace horngauge {

WeightSystem::WeightSystem(const std::array<long, 3>& user_w, long degree) : d(degree) {
    for (long wi : user_w)
        if (wi < 1) throw WeightError("weights must be positive integers");
    std::array<int, 3> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return user_w[a] > user_w[b]; });
    perm = idx;
    for (int i = 0; i < 3; ++i) w[i] = user_w[idx[i]];
    if (d <= w[0])
        throw WeightError("weighted degree d=" + std::to_string(d) +
                          " must exceed the largest weight " + std::to_string(w[0]));
    alpha[0] = (d - w[1]) * (d - w[2]);
    alpha[1] = (d - w[0]) * (d - w[2]);
    alpha[2] = (d - w[0]) * (d - w[1]);
    k = (d - w[0]) * (d - w[1]) * (d - w[2]);
}

void Polynomial::add_term(const Monomial& m, Complex c) {
    if (m.e[0] < 0 || m.e[1] < 0 || m.e[2] < 0)
        throw InputError("negative exponent in monomial");
    if (m.total_degree() > kMaxTotalDegree)
        throw InputError("monomial total degree exceeds limit " +
                         std::to_string(kMaxTotalDegree));
    if (c == Complex{}) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex{}) terms_.erase(it);
    }
}

namespace {

void fill_powers(std::vector<Complex>& p, Complex x, int maxe) {
    p.resize(maxe + 1);
    p[0] = 1.0;
    for (int i = 1; i <= maxe; ++i) p[i] = p[i - 1] * x;
}

}  // namespace

Complex Polynomial::eval(const C3& X) const {
    if (terms_.empty()) return {};
    std::array<int, 3> maxe{0, 0, 0};
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < 3; ++i) maxe[i] = std::max(maxe[i], m.e[i]);
    std::vector<Complex> px, py, pz;
    fill_powers(px, X[0], maxe[0]);
    fill_powers(py, X[1], maxe[1]);
    fill_powers(pz, X[2], maxe[2]);
    Complex acc{};
    for (const auto& [m, c] : terms_)
        acc += c * px[m.e[0]] * py[m.e[1]] * pz[m.e[2]];
    return acc;
}

double Polynomial::eval_scale(const C3& X) const {
    const double ax = std::abs(X[0]), ay = std::abs(X[1]), az = std::abs(X[2]);
    double acc = 0.0;
    for (const auto& [m, c] : terms_)
        acc += std::abs(c) * std::pow(ax, m.e[0]) * std::pow(ay, m.e[1]) *
               std::pow(az, m.e[2]);
    return acc;
}

int Polynomial::max_exponent(int var) const {
    int m = 0;
    for (const auto& [mon, c] : terms_) m = std::max(m, mon.e[var]);
    return m;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

long weighted_degree(const Monomial& m, const std::array<long, 3>& w) {
    return w[0] * m.e[0] + w[1] * m.e[1] + w[2] * m.e[2];
}

std::array<Polynomial, 3> grad(const Polynomial& f) {
    std::array<Polynomial, 3> g;
    for (const auto& [m, c] : f.terms()) {
        for (int i = 0; i < 3; ++i) {
            if (m.e[i] == 0) continue;
            Monomial dm = m;
            dm.e[i] -= 1;
            g[i].add_term(dm, c * static_cast<double>(m.e[i]));
        }
    }
    return g;
}

SWHPolynomial decompose(const Polynomial& f, const std::array<long, 3>& user_weights,
                        std::optional<long> d) {
    if (f.is_zero()) throw InputError("cannot decompose the zero polynomial");
    for (long wi : user_weights)
        if (wi < 1) throw WeightError("weights must be positive integers");

    // weighted degree is invariant under variable permutation, so infer d
    // in user order before canonicalizing
    long dmin = 0;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const long wd = weighted_degree(m, user_weights);
        if (first || wd < dmin) dmin = wd;
        first = false;
    }
    const long degree = d.value_or(dmin);
    if (dmin < degree)
        throw DegreeConflict("term of weighted degree " + std::to_string(dmin) +
                             " falls below the supplied degree " +
                             std::to_string(degree));

    WeightSystem ws(user_weights, degree);

    SWHPolynomial out{Polynomial{}, Polynomial{}, ws};
    for (const auto& [m, c] : f.terms()) {
        Monomial cm;  // canonical slot i holds user variable perm[i]
        for (int i = 0; i < 3; ++i) cm.e[i] = m.e[ws.perm[i]];
        const long wd = weighted_degree(cm, ws);
        if (wd == degree)
            out.h.add_term(cm, c);
        else
            out.theta.add_term(cm, c);
    }
    if (out.h.is_zero())
        throw EmptyHomogeneousPart("no term attains the weighted degree " +
                                   std::to_string(degree));
    return out;
}

double euler_residual(const Polynomial& h, const WeightSystem& ws, const C3& X) {
    const auto g = grad(h);
    Complex acc{};
    for (int i = 0; i < 3; ++i)
        acc += static_cast<double>(ws.w[i]) * X[i] * g[i].eval(X);
    acc -= static_cast<double>(ws.d) * h.eval(X);
    return std::abs(acc);
}

namespace {

C3 random_sphere_point(std::mt19937_64& rng) {
    std::normal_distribution<double> n01(0.0, 1.0);
    C3 X{Complex(n01(rng), n01(rng)), Complex(n01(rng), n01(rng)),
         Complex(n01(rng), n01(rng))};
    const double s = norm(X);
    return (1.0 / (s > 0 ? s : 1.0)) * X;
}

}  // namespace

ProbeReport singularity_probe(const Polynomial& h, const WeightSystem& ws,
                              int n_samples, std::uint64_t seed, double threshold,
                              int threads) {
    (void)ws;
    if (n_samples < 1) throw InputError("probe needs at least one sample");

    const auto g = grad(h);
    std::array<std::array<Polynomial, 3>, 3> hess;
    for (int i = 0; i < 3; ++i) hess[i] = grad(g[i]);

    auto grad_sq = [&](const C3& X) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i) s += std::norm(g[i].eval(X));
        return s;
    };
    // real gradient of |grad h|^2 on C^3 = R^6, as a complex 3-vector
    auto grad_sq_grad = [&](const C3& X) {
        C3 gv{};
        for (int i = 0; i < 3; ++i) {
            const Complex gi = g[i].eval(X);
            for (int j = 0; j < 3; ++j)
                gv[j] += 2.0 * std::conj(hess[i][j].eval(X)) * gi;
        }
        return gv;
    };

    struct Best {
        double val;
        C3 at;
    };
    std::vector<Best> best(n_samples);

    parallel_for(n_samples, threads, [&](std::size_t i) {
        std::mt19937_64 rng(mix_seed(seed, i));
        C3 X = random_sphere_point(rng);
        double m = grad_sq(X);
        double step = 0.1;
        for (int it = 0; it < 200 && step > 1e-14; ++it) {
            C3 gv = grad_sq_grad(X);
            // project onto the tangent space of the unit sphere
            double radial = 0.0;
            for (int j = 0; j < 3; ++j)
                radial += std::real(std::conj(X[j]) * gv[j]);
            C3 tang = gv - radial * X;
            const double tn = norm(tang);
            if (tn < 1e-13) break;
            bool moved = false;
            while (step > 1e-14) {
                C3 Y = X - (step / tn) * tang;
                Y = (1.0 / norm(Y)) * Y;
                const double my = grad_sq(Y);
                if (my < m) {
                    X = Y;
                    m = my;
                    moved = true;
                    step *= 1.5;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) break;
        }
        best[i] = Best{m, X};
    });

    ProbeReport rep;
    rep.n_samples = n_samples;
    rep.threshold = threshold;
    rep.min_grad_sq = best[0].val;
    rep.argmin = best[0].at;
    for (const auto& b : best) {  // deterministic index-order reduction
        if (b.val < rep.min_grad_sq) {
            rep.min_grad_sq = b.val;
            rep.argmin = b.at;
        }
    }
    rep.possibly_non_isolated = rep.min_grad_sq < threshold;
    return rep;
}

}  // namespace horngauge
