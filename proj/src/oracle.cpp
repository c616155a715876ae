#include "rindler_dicke/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <queue>
#include <vector>

namespace rindler_dicke::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss 7 / Kronrod 15 rule, positive abscissae with {node, G7, K15} weights.
constexpr double kRule[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

using Fn = std::function<Complex(double)>;

Complex g7k15(const Fn& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const Complex f0 = f(mid);
    Complex g7 = kRule[0][1] * f0;
    Complex k15 = kRule[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kRule[i][0];
        const Complex fi = f(mid + dx) + f(mid - dx);
        g7 += kRule[i][1] * fi;
        k15 += kRule[i][2] * fi;
    }
    g7 *= h;
    k15 *= h;
    err = std::abs(k15 - g7);
    return k15;
}

// Globally adaptive bisection, worst segment first.
Complex adapt(const Fn& f, double a, double b, double tol, int max_subdiv,
              const char* what) {
    if (!(b > a)) return {0.0, 0.0};
    struct Seg {
        double err;
        double a, b;
        Complex val;
        bool operator<(const Seg& o) const { return err < o.err; }
    };
    std::priority_queue<Seg> queue;
    double err0 = 0.0;
    const Complex v0 = g7k15(f, a, b, err0);
    queue.push({err0, a, b, v0});
    Complex done_val{0.0, 0.0};
    double done_err = 0.0;
    double queue_err = err0;
    double abs_scale = std::abs(v0);
    int nseg = 1;
    const double wmin = 1e-13 * std::max({std::abs(a), std::abs(b), 1.0});
    while (queue_err + done_err > std::max(tol, 1e-15 * abs_scale)) {
        if (queue.empty()) break;
        const Seg worst = queue.top();
        queue.pop();
        queue_err -= worst.err;
        if (worst.b - worst.a < wmin || nseg >= max_subdiv) {
            // refinement exhausted for this segment
            done_val += worst.val;
            done_err += worst.err;
            if (nseg >= max_subdiv && queue_err + done_err > 8.0 * tol)
                throw NonConvergence(std::string("adaptive quadrature: subdivision cap in ") + what);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        double e1 = 0.0, e2 = 0.0;
        const Complex v1 = g7k15(f, worst.a, mid, e1);
        const Complex v2 = g7k15(f, mid, worst.b, e2);
        queue.push({e1, worst.a, mid, v1});
        queue.push({e2, mid, worst.b, v2});
        queue_err += e1 + e2;
        abs_scale = std::max(abs_scale, std::abs(v1) + std::abs(v2));
        ++nseg;
    }
    Complex total = done_val;
    while (!queue.empty()) {
        total += queue.top().val;
        queue.pop();
    }
    return total;
}

Complex cpow(double x, Complex sigma) { return std::exp(sigma * std::log(x)); }

// int_X^inf e^{-q t} t^{sigma-1} dt by repeated integration by parts;
// valid for |q| X well above |sigma| + terms.
Complex ibp_upper(Complex q, Complex sigma, double X, double* budget = nullptr) {
    Complex coeff = 1.0 / q;
    Complex sum = coeff * cpow(X, sigma - 1.0);
    Complex last = sum;
    for (int j = 0; j < 12; ++j) {
        coeff *= (sigma - 1.0 - static_cast<double>(j)) / q;
        const Complex term = coeff * cpow(X, sigma - 2.0 - static_cast<double>(j));
        if (std::abs(term) >= std::abs(last)) break; // asymptotic optimum reached
        sum += term;
        last = term;
    }
    const Complex result = std::exp(-q * X) * sum;
    if (budget) *budget += std::abs(std::exp(-q * X)) * std::abs(last);
    return result;
}

// Prefix integrals of f over [a, b] on a panel decomposition refined to tol.
class CumQuad {
public:
    CumQuad(Fn f, double a, double b, double tol, int max_panels, const char* what)
        : f_(std::move(f)) {
        edges_.push_back(a);
        build(a, b, tol, b - a, max_panels, what);
        prefix_.resize(vals_.size() + 1);
        prefix_[0] = {0.0, 0.0};
        for (std::size_t i = 0; i < vals_.size(); ++i) prefix_[i + 1] = prefix_[i] + vals_[i];
    }

    Complex upto(double x) const {
        if (x <= edges_.front()) return {0.0, 0.0};
        if (x >= edges_.back()) return prefix_.back();
        const auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - edges_.begin()) - 1;
        double e = 0.0;
        return prefix_[i] + g7k15(f_, edges_[i], x, e);
    }

    Complex total() const { return prefix_.back(); }

private:
    void build(double a, double b, double tol, double full_width, int max_panels,
               const char* what) {
        double err = 0.0;
        const Complex v = g7k15(f_, a, b, err);
        const double width = b - a;
        if (err <= tol * std::max(width / full_width, 1e-6) || width < 1e-13 ||
            static_cast<int>(vals_.size()) >= max_panels) {
            if (static_cast<int>(vals_.size()) >= max_panels && err > tol)
                throw NonConvergence(std::string("cumulative quadrature: panel cap in ") + what);
            edges_.push_back(b);
            vals_.push_back(v);
            return;
        }
        const double mid = 0.5 * (a + b);
        build(a, mid, tol, full_width, max_panels, what);
        build(mid, b, tol, full_width, max_panels, what);
    }

    Fn f_;
    std::vector<double> edges_;
    std::vector<Complex> vals_;
    std::vector<Complex> prefix_;
};

struct EngineParams {
    double t_c;      // boundary-analytic split point
    double t_hi;     // switch to the asymptotic tail
    double delta;    // absolute small-t cutoff inside boundary remainders
    double tol;      // per-piece quadrature tolerance
    int max_subdiv;
};

EngineParams engine_params(const QuadratureConfig& cfg) {
    EngineParams ep;
    ep.t_c = 0.5;
    ep.t_hi = std::max(45.0, 1.5 * cfg.tau_window);
    ep.delta = ep.t_c * std::exp(-(cfg.tau_window + 12.0));
    ep.tol = cfg.abs_tol / 10.0;
    ep.max_subdiv = cfg.max_subdivisions;
    return ep;
}

// int_0^X e^{-q t} t^{sigma-1} dt = X^sigma/sigma + convergent remainder.
// The power term carries the analytic continuation across the Re sigma <= 0
// boundary (the damped-limit value of the pure-oscillation piece).
Complex reg0(Complex sigma, Complex q, double X, const EngineParams& ep,
             double* budget = nullptr) {
    if (!(X > 0.0)) return {0.0, 0.0};
    const Complex head = cpow(X, sigma) / sigma;
    const double delta = std::min(ep.delta, 0.25 * X);
    const Fn rem_u = [sigma, q](double u) {
        const double t = std::exp(u);
        return (std::exp(-q * t) - 1.0) * std::exp(sigma * u);
    };
    const Complex rem = adapt(rem_u, std::log(delta), std::log(X), ep.tol,
                              ep.max_subdiv, "reg0");
    if (budget) *budget += std::abs(q) * delta;
    return head + rem;
}

// Cumulative machinery for one rotated kernel e^{-q t} t^{sigma-1}.
class KernelCdf {
public:
    KernelCdf(Complex sigma, Complex q, const EngineParams& ep)
        : sigma_(sigma), q_(q), ep_(ep),
          mid_(Fn([sigma, q](double t) { return std::exp(-q * t + (sigma - 1.0) * std::log(t)); }),
               ep.t_c, ep.t_hi, ep.tol / 10.0, 4 * ep.max_subdiv, "kernel cdf"),
          small_(Fn([sigma, q](double u) {
                     const double t = std::exp(u);
                     return (std::exp(-q * t) - 1.0) * std::exp(sigma * u);
                 }),
                 std::log(ep.delta), std::log(ep.t_c), ep.tol / 10.0,
                 4 * ep.max_subdiv, "kernel cdf boundary") {
        base_ = cpow(ep_.t_c, sigma_) / sigma_ + small_.total();
        budget_ += std::abs(q_) * ep_.delta;
        full_ = base_ + mid_.total() + ibp_upper(q_, sigma_, ep_.t_hi, &budget_);
    }

    // int_0^T
    Complex partial(double T) const {
        if (T <= 0.0) return {0.0, 0.0};
        if (T < ep_.t_c) {
            const Complex head = cpow(T, sigma_) / sigma_;
            if (T <= ep_.delta) return head;
            return head + small_.upto(std::log(T));
        }
        if (T <= ep_.t_hi) return base_ + mid_.upto(T);
        return full_ - ibp_upper(q_, sigma_, T);
    }

    // int_T^inf
    Complex upper(double T) const {
        if (T >= ep_.t_hi) return ibp_upper(q_, sigma_, T);
        return full_ - partial(T);
    }

    Complex full() const { return full_; }
    double budget() const { return budget_; }

private:
    Complex sigma_, q_;
    EngineParams ep_;
    CumQuad mid_;
    CumQuad small_;
    Complex base_;
    Complex full_;
    double budget_ = 0.0;
};

// int_0^inf e^{-q t} t^{sigma-1} dt
Complex k_complete(Complex sigma, Complex q, const EngineParams& ep, double* budget) {
    const Fn kern = [sigma, q](double t) {
        return std::exp(-q * t + (sigma - 1.0) * std::log(t));
    };
    return reg0(sigma, q, ep.t_c, ep, budget) +
           adapt(kern, ep.t_c, ep.t_hi, ep.tol, ep.max_subdiv, "k_complete") +
           ibp_upper(q, sigma, ep.t_hi, budget);
}

QuadratureOutcome extrapolate(const std::vector<double>& ladder,
                              std::vector<Complex> vals, double abs_tol,
                              double budget, const char* what) {
    QuadratureOutcome out;
    out.ladder_values = vals;
    const std::size_t n = vals.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            vals[i] += (vals[i] - vals[i - 1]) * ladder[i] / (ladder[i - j] - ladder[i]);
    out.value = vals[n - 1];
    out.residual = (n >= 2) ? std::abs(vals[n - 1] - vals[n - 2]) : 0.0;
    out.tail_budget = budget;
    if (out.residual > abs_tol * std::max(1.0, std::abs(out.value)))
        throw NonConvergence(std::string("extrapolation residual above abs_tol in ") + what);
    return out;
}

Complex rl_outer(double xi, double kappa, double eps, const QuadratureConfig& cfg,
                 bool right_outer, double* budget) {
    const EngineParams ep = engine_params(cfg);
    const Complex s(0.0, xi);
    const Complex q1(1.0, eps);   // rotated left-mover kernel
    const Complex q2(1.0, -eps);  // rotated right-mover kernel
    const double k2 = kappa * kappa;
    const double pref = std::exp(-kPi * xi); // i^s * (-i)^{-s}, exact
    if (right_outer) {
        // outer v (right mover, later time), inner partial left integral
        const KernelCdf cdf(s, q1, ep);
        const Complex p0 = cdf.full() * reg0(-s, q2, ep.t_c, ep, budget);
        const double v_lo = k2 / ep.t_hi;
        const Fn corr = [&](double u) {
            const double v = std::exp(u);
            return std::exp(-q2 * v - s * u) * cdf.upper(k2 / v);
        };
        const Complex p1 = (v_lo < ep.t_c)
            ? -adapt(corr, std::log(v_lo), std::log(ep.t_c), ep.tol, ep.max_subdiv, "beta rl corr")
            : Complex{0.0, 0.0};
        const Fn mid = [&](double v) {
            return std::exp(-q2 * v + (-s - 1.0) * std::log(v)) * cdf.partial(k2 / v);
        };
        const Complex p2 = adapt(mid, ep.t_c, ep.t_hi, ep.tol, ep.max_subdiv, "beta rl mid");
        const Complex p3 = cpow(k2, s) / s * ibp_upper(q2, -2.0 * s, ep.t_hi, budget);
        *budget += std::exp(-ep.t_hi) * (1.0 + k2) + std::exp(-ep.t_hi);
        return pref * (p0 + p1 + p2 + p3);
    }
    // swapped ordering: outer t (left mover, later time), inner upper right integral
    const KernelCdf cdf(-s, q2, ep);
    const double t_lo = k2 / ep.t_hi;
    const Fn low = [&](double u) {
        const double t = std::exp(u);
        return std::exp(-q1 * t + s * u) * cdf.upper(k2 / t);
    };
    const Complex p1 = (t_lo < ep.t_c)
        ? adapt(low, std::log(t_lo), std::log(ep.t_c), ep.tol, ep.max_subdiv, "beta rl swapped low")
        : Complex{0.0, 0.0};
    const Fn mid = [&](double t) {
        return std::exp(-q1 * t + (s - 1.0) * std::log(t)) * cdf.upper(k2 / t);
    };
    const Complex p2 = adapt(mid, std::max(t_lo, ep.t_c), ep.t_hi, ep.tol,
                             ep.max_subdiv, "beta rl swapped mid");
    const Complex p3 = cdf.full() * ibp_upper(q1, s, ep.t_hi, budget) +
                       cpow(k2, -s) / s * ibp_upper(q1, 2.0 * s, ep.t_hi, budget);
    *budget += std::exp(-ep.t_hi) * (1.0 + k2);
    return pref * (p1 + p2 + p3);
}

Complex beta_eps(BetaChannel ch, double xi, double kappa, double theta, double eps,
                 const QuadratureConfig& cfg, double* budget) {
    const EngineParams ep = engine_params(cfg);
    const Complex s(0.0, xi);
    if (ch == BetaChannel::rl) return rl_outer(xi, kappa, eps, cfg, true, budget);
    // ll and rr share one structure, mirrored in (sigma, q) and the theta phase
    const bool ll = (ch == BetaChannel::ll);
    const Complex sigma = ll ? s : -s;
    const Complex q = ll ? Complex(1.0, eps) : Complex(1.0, -eps);
    const KernelCdf cdf(sigma, q, ep);
    const Complex p0 = reg0(2.0 * sigma, q, ep.t_c, ep, budget) / sigma;
    const Fn rem = [&](double u) {
        const double t = std::exp(u);
        return std::exp(-q * t + sigma * u) * cdf.partial(t) -
               std::exp(-q * t + 2.0 * sigma * u) / sigma;
    };
    const Complex p1 = adapt(rem, std::log(ep.delta), std::log(ep.t_c), ep.tol,
                             ep.max_subdiv, "beta diag boundary");
    const Fn mid = [&](double t) {
        return std::exp(-q * t + (sigma - 1.0) * std::log(t)) * cdf.partial(t);
    };
    const Complex p2 = adapt(mid, ep.t_c, ep.t_hi, ep.tol, ep.max_subdiv, "beta diag mid");
    const Complex p3 = cdf.full() * ibp_upper(q, sigma, ep.t_hi, budget);
    *budget += std::exp(-2.0 * ep.t_hi) + cdf.budget();
    const Complex phase = std::exp(Complex(-kPi * xi, ll ? 2.0 * theta : -2.0 * theta));
    return phase * (p0 + p1 + p2 + p3);
}

} // namespace

void QuadratureConfig::validate() const {
    if (!(damping_eps > 0.0)) throw DomainError("QuadratureConfig: damping_eps must be > 0");
    if (!(abs_tol > 0.0)) throw DomainError("QuadratureConfig: abs_tol must be > 0");
    if (max_subdivisions < 8) throw DomainError("QuadratureConfig: max_subdivisions too small");
    if (!(tau_window > 1.0)) throw DomainError("QuadratureConfig: tau_window must be > 1");
    if (eps_ladder.size() < 2) throw DomainError("QuadratureConfig: eps_ladder needs >= 2 rungs");
    for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
        if (!(eps_ladder[i] > 0.0))
            throw DomainError("QuadratureConfig: eps_ladder entries must be > 0");
        if (i > 0 && !(eps_ladder[i] < eps_ladder[i - 1]))
            throw DomainError("QuadratureConfig: eps_ladder must be strictly decreasing");
    }
}

QuadratureOutcome alpha_numeric_full(Sign sign, const DimensionlessParams& dp,
                                     const QuadratureConfig& cfg) {
    cfg.validate();
    dp.validate();
    const EngineParams ep = engine_params(cfg);
    const double theta = kinematics::theta_phase(dp);
    const bool plus = (sign == Sign::plus);
    const Complex s(0.0, plus ? dp.xi : -dp.xi);
    // rotation phase i^s (plus) or (-i)^s (minus); e^{-pi xi/2} exactly
    const Complex rot = std::exp(s * Complex(0.0, plus ? kPi / 2.0 : -kPi / 2.0));
    const Complex osc = std::exp(Complex(0.0, plus ? theta : -theta));
    double budget = 0.0;
    std::vector<Complex> vals;
    vals.reserve(cfg.eps_ladder.size());
    for (const double eps : cfg.eps_ladder) {
        const Complex q(1.0, plus ? eps : -eps);
        vals.push_back(osc * rot * k_complete(s, q, ep, &budget));
    }
    return extrapolate(cfg.eps_ladder, std::move(vals), cfg.abs_tol, budget, "alpha_numeric");
}

Complex alpha_numeric(Sign sign, const DimensionlessParams& dp, const QuadratureConfig& cfg) {
    return alpha_numeric_full(sign, dp, cfg).value;
}

QuadratureOutcome beta_numeric_full(BetaChannel ch, const DimensionlessParams& dp,
                                    const QuadratureConfig& cfg) {
    cfg.validate();
    dp.validate();
    const EngineParams ep = engine_params(cfg);
    if (dp.kappa * dp.kappa >= 0.5 * ep.t_c * ep.t_hi)
        throw DomainError("beta_numeric: kappa outside the supported window");
    const double theta = kinematics::theta_phase(dp);
    double budget = 0.0;
    std::vector<Complex> vals;
    vals.reserve(cfg.eps_ladder.size());
    for (const double eps : cfg.eps_ladder)
        vals.push_back(beta_eps(ch, dp.xi, dp.kappa, theta, eps, cfg, &budget));
    return extrapolate(cfg.eps_ladder, std::move(vals), cfg.abs_tol, budget, "beta_numeric");
}

Complex beta_numeric(BetaChannel ch, const DimensionlessParams& dp,
                     const QuadratureConfig& cfg) {
    return beta_numeric_full(ch, dp, cfg).value;
}

Complex incomplete_gamma_numeric(Complex s, double z, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(z > 0.0)) throw DomainError("incomplete_gamma_numeric: requires z > 0");
    if (s == 0.0) throw DomainError("incomplete_gamma_numeric: s must be nonzero");
    const EngineParams ep = engine_params(cfg);
    const Complex q(1.0, 0.0);
    const double split = std::min(z, ep.t_c);
    Complex val = reg0(s, q, split, ep);
    if (z > split) {
        const Fn kern = [s](double t) { return std::exp(-t + (s - 1.0) * std::log(t)); };
        val += adapt(kern, split, z, ep.tol, ep.max_subdiv, "incomplete_gamma_numeric");
    }
    return val;
}

Complex damped_power_integral(Complex s, double eps, const QuadratureConfig& cfg) {
    cfg.validate();
    if (eps <= 0.0) eps = cfg.damping_eps;
    const EngineParams ep = engine_params(cfg);
    const Complex rot = std::exp(s * Complex(0.0, kPi / 2.0)); // i^s
    double budget = 0.0;
    return rot * k_complete(s, Complex(1.0, eps), ep, &budget);
}

namespace detail {

Complex beta_rl_swapped(const DimensionlessParams& dp, const QuadratureConfig& cfg) {
    cfg.validate();
    dp.validate();
    double budget = 0.0;
    std::vector<Complex> vals;
    vals.reserve(cfg.eps_ladder.size());
    for (const double eps : cfg.eps_ladder)
        vals.push_back(rl_outer(dp.xi, dp.kappa, eps, cfg, false, &budget));
    return extrapolate(cfg.eps_ladder, std::move(vals), cfg.abs_tol, budget,
                       "beta_rl_swapped").value;
}

} // namespace detail

} // namespace rindler_dicke::oracle
