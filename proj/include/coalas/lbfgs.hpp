// Limited-memory BFGS minimizer with an orthant-wise (OWL-QN) mode for
// L1-regularized objectives. The callback supplies the smooth part of the
// objective and its gradient; the L1 term is handled here through the
// pseudo-gradient and orthant projection.

#ifndef COALAS_LBFGS_HPP
#define COALAS_LBFGS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <deque>
#include <functional>
#include <stdexcept>
#include <vector>

namespace coalas {

struct OptimizerOptions {
    int memory = 6;
    int max_iterations = 200;
    double tolerance = 1e-5;  // relative objective-change stop threshold
    double l1 = 0.0;          // c1; 0 disables the orthant-wise machinery
    double armijo = 1e-4;
    int max_linesearch = 40;
};

struct OptimizerResult {
    int iterations = 0;
    bool converged = false;
    std::vector<double> objective_trace;  // full objective per iteration
};

// Evaluates smooth f(x) and writes grad; returns f.
using SmoothFn =
    std::function<double(const std::vector<double>&, std::vector<double>&)>;

namespace detail {

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double l1_norm(const std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += std::fabs(v);
    return s;
}

}  // namespace detail

inline OptimizerResult minimize(std::vector<double>& x, const SmoothFn& fn,
                                const OptimizerOptions& opt = {}) {
    const std::size_t n = x.size();
    const bool owlqn = opt.l1 > 0;
    OptimizerResult res;

    std::vector<double> g(n), pg(n), d(n), x_new(n), g_new(n);
    std::deque<std::vector<double>> s_hist, y_hist;
    std::deque<double> rho_hist;

    double f_smooth = fn(x, g);
    double f = f_smooth + opt.l1 * detail::l1_norm(x);
    if (!std::isfinite(f))
        throw std::runtime_error("non-finite objective at iteration 0");
    res.objective_trace.push_back(f);

    auto pseudo_gradient = [&] {
        if (!owlqn) {
            pg = g;
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] > 0) pg[i] = g[i] + opt.l1;
            else if (x[i] < 0) pg[i] = g[i] - opt.l1;
            else if (g[i] + opt.l1 < 0) pg[i] = g[i] + opt.l1;
            else if (g[i] - opt.l1 > 0) pg[i] = g[i] - opt.l1;
            else pg[i] = 0;
        }
    };

    for (int iter = 1; iter <= opt.max_iterations; ++iter) {
        pseudo_gradient();

        double gnorm = 0;
        for (double v : pg) gnorm += v * v;
        if (gnorm == 0) {
            res.converged = true;
            break;
        }

        // Two-loop recursion on the smooth-gradient history.
        d = pg;
        std::vector<double> alpha(s_hist.size());
        for (std::size_t k = s_hist.size(); k-- > 0;) {
            alpha[k] = rho_hist[k] * detail::dot(s_hist[k], d);
            for (std::size_t i = 0; i < n; ++i) d[i] -= alpha[k] * y_hist[k][i];
        }
        if (!s_hist.empty()) {
            double gamma = detail::dot(s_hist.back(), y_hist.back()) /
                           detail::dot(y_hist.back(), y_hist.back());
            for (double& v : d) v *= gamma;
        }
        for (std::size_t k = 0; k < s_hist.size(); ++k) {
            double beta = rho_hist[k] * detail::dot(y_hist[k], d);
            for (std::size_t i = 0; i < n; ++i)
                d[i] += (alpha[k] - beta) * s_hist[k][i];
        }
        for (double& v : d) v = -v;

        if (owlqn) {
            // Constrain the direction to the pseudo-gradient's descent
            // orthant.
            for (std::size_t i = 0; i < n; ++i)
                if (d[i] * pg[i] > 0) d[i] = 0;
        }

        // Backtracking line search on the full objective.
        double step = (iter == 1 && s_hist.empty()) ? 1.0 / std::sqrt(gnorm) : 1.0;
        double f_try = f, f_smooth_try = f_smooth;
        bool ok = false;
        for (int ls = 0; ls < opt.max_linesearch; ++ls) {
            for (std::size_t i = 0; i < n; ++i) x_new[i] = x[i] + step * d[i];
            if (owlqn) {
                // Project onto the orthant chosen at x.
                for (std::size_t i = 0; i < n; ++i) {
                    double xi = x[i] != 0 ? x[i] : -pg[i];
                    if (x_new[i] * xi < 0) x_new[i] = 0;
                }
            }
            f_smooth_try = fn(x_new, g_new);
            f_try = f_smooth_try + opt.l1 * detail::l1_norm(x_new);
            double delta = 0;
            for (std::size_t i = 0; i < n; ++i) delta += pg[i] * (x_new[i] - x[i]);
            if (std::isfinite(f_try) && f_try <= f + opt.armijo * delta && delta < 0) {
                ok = true;
                break;
            }
            step *= 0.5;
        }
        if (!ok) {
            // Line search failed; treat the current point as converged.
            res.converged = true;
            break;
        }

        std::vector<double> s_vec(n), y_vec(n);
        for (std::size_t i = 0; i < n; ++i) {
            s_vec[i] = x_new[i] - x[i];
            y_vec[i] = g_new[i] - g[i];
        }
        double sy = detail::dot(s_vec, y_vec);
        if (sy > 1e-12) {
            if (static_cast<int>(s_hist.size()) == opt.memory) {
                s_hist.pop_front();
                y_hist.pop_front();
                rho_hist.pop_front();
            }
            s_hist.push_back(std::move(s_vec));
            y_hist.push_back(std::move(y_vec));
            rho_hist.push_back(1.0 / sy);
        }

        double f_prev = f;
        x = x_new;
        g = g_new;
        f = f_try;
        f_smooth = f_smooth_try;
        if (!std::isfinite(f))
            throw std::runtime_error("non-finite objective at iteration " +
                                     std::to_string(iter));
        res.objective_trace.push_back(f);
        res.iterations = iter;

        double denom = std::max(std::fabs(f_prev), 1.0);
        if (std::fabs(f_prev - f) / denom < opt.tolerance) {
            res.converged = true;
            break;
        }
    }
    return res;
}

}  // namespace coalas

#endif
