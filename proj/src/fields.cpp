#include "khess/fields.hpp"

#include "khess/errors.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace khess {

namespace {

std::string point_string(const Eigen::VectorXd& x) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    os << ")";
    return os.str();
}

} // namespace

AnalyticField::AnalyticField(int dim, ValueFn value, double fd_step)
    : dim_(dim), value_(std::move(value)), fd_step_(fd_step) {
    if (dim_ < 1) throw std::invalid_argument("AnalyticField: dimension must be >= 1");
    if (!(fd_step_ > 0.0)) throw std::invalid_argument("AnalyticField: fd_step must be > 0");
}

AnalyticField& AnalyticField::with_gradient(GradFn g) {
    grad_ = std::move(g);
    return *this;
}

AnalyticField& AnalyticField::with_hessian(HessFn h) {
    hess_ = std::move(h);
    return *this;
}

double AnalyticField::value(const Eigen::VectorXd& x) const { return value_(x); }

Eigen::VectorXd AnalyticField::gradient(const Eigen::VectorXd& x) const {
    if (grad_) return grad_(x);
    Eigen::VectorXd g(dim_);
    Eigen::VectorXd xp = x, xm = x;
    for (int i = 0; i < dim_; ++i) {
        xp[i] = x[i] + fd_step_;
        xm[i] = x[i] - fd_step_;
        g[i] = (value_(xp) - value_(xm)) / (2.0 * fd_step_);
        xp[i] = x[i];
        xm[i] = x[i];
    }
    return g;
}

SymmetricMatrix AnalyticField::hessian(const Eigen::VectorXd& x) const {
    if (hess_) return hess_(x);
    const double h = fd_step_;
    if (grad_) {
        Eigen::MatrixXd m(dim_, dim_);
        Eigen::VectorXd xp = x, xm = x;
        for (int i = 0; i < dim_; ++i) {
            xp[i] = x[i] + h;
            xm[i] = x[i] - h;
            m.col(i) = (grad_(xp) - grad_(xm)) / (2.0 * h);
            xp[i] = x[i];
            xm[i] = x[i];
        }
        return SymmetricMatrix::from_dense(0.5 * (m + m.transpose()));
    }
    SymmetricMatrix out(dim_);
    const double fc = value_(x);
    Eigen::VectorXd y = x;
    for (int i = 0; i < dim_; ++i) {
        y[i] = x[i] + h;
        const double fp = value_(y);
        y[i] = x[i] - h;
        const double fm = value_(y);
        y[i] = x[i];
        out.set(i, i, (fp - 2.0 * fc + fm) / (h * h));
        for (int j = i + 1; j < dim_; ++j) {
            y[i] = x[i] + h;
            y[j] = x[j] + h;
            const double fpp = value_(y);
            y[j] = x[j] - h;
            const double fpm = value_(y);
            y[i] = x[i] - h;
            const double fmm = value_(y);
            y[j] = x[j] + h;
            const double fmp = value_(y);
            y[i] = x[i];
            y[j] = x[j];
            out.set(i, j, (fpp + fmm - fpm - fmp) / (4.0 * h * h));
        }
    }
    return out;
}

// --- catalog -----------------------------------------------------------

AnalyticField constant_field(int n, double c) {
    AnalyticField f(n, [c](const Eigen::VectorXd&) { return c; });
    f.with_gradient([n](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(n).eval(); });
    f.with_hessian([n](const Eigen::VectorXd&) { return SymmetricMatrix(n); });
    return f;
}

AnalyticField quadratic_field(int n, double a, double c) {
    AnalyticField f(n, [a, c](const Eigen::VectorXd& x) { return a * x.squaredNorm() + c; });
    f.with_gradient([a](const Eigen::VectorXd& x) { return (2.0 * a * x).eval(); });
    f.with_hessian([n, a](const Eigen::VectorXd&) {
        return SymmetricMatrix::from_dense((2.0 * a * Eigen::MatrixXd::Identity(n, n)).eval());
    });
    return f;
}

AnalyticField radial_power_field(int n, double a, double m) {
    AnalyticField f(n, [a, m](const Eigen::VectorXd& x) {
        const double r = x.norm();
        return r == 0.0 ? 0.0 : a * std::pow(r, m);
    });
    f.with_gradient([n, a, m](const Eigen::VectorXd& x) {
        const double r = x.norm();
        if (r == 0.0) return Eigen::VectorXd::Zero(n).eval();
        return (a * m * std::pow(r, m - 2.0) * x).eval();
    });
    f.with_hessian([n, a, m](const Eigen::VectorXd& x) {
        const double r = x.norm();
        if (r == 0.0) {
            if (m == 2.0)
                return SymmetricMatrix::from_dense(
                    (2.0 * a * Eigen::MatrixXd::Identity(n, n)).eval());
            return SymmetricMatrix(n);
        }
        Eigen::MatrixXd h = a * m * std::pow(r, m - 2.0) * Eigen::MatrixXd::Identity(n, n) +
                            a * m * (m - 2.0) * std::pow(r, m - 4.0) * (x * x.transpose());
        return SymmetricMatrix::from_dense(h);
    });
    return f;
}

AnalyticField product_field(const AnalyticField& f, const AnalyticField& g) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("product_field: dimension mismatch");
    const int n = f.dimension();
    AnalyticField out(
        n, [f, g](const Eigen::VectorXd& x) { return f.value(x) * g.value(x); },
        std::min(f.fd_step(), g.fd_step()));
    out.with_gradient([f, g](const Eigen::VectorXd& x) {
        return (f.value(x) * g.gradient(x) + g.value(x) * f.gradient(x)).eval();
    });
    out.with_hessian([f, g](const Eigen::VectorXd& x) {
        const Eigen::VectorXd gf = f.gradient(x), gg = g.gradient(x);
        Eigen::MatrixXd h = f.value(x) * g.hessian(x).dense() +
                            g.value(x) * f.hessian(x).dense() + gf * gg.transpose() +
                            gg * gf.transpose();
        return SymmetricMatrix::from_dense(h);
    });
    return out;
}

double bump_eta(double t) {
    if (std::abs(t) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - t * t));
}

namespace {
double bump_eta_deriv(double t) {
    if (std::abs(t) >= 1.0) return 0.0;
    const double s = 1.0 - t * t;
    return bump_eta(t) * (-2.0 * t) / (s * s);
}
} // namespace

AnalyticField wang_field(double alpha, double beta, int n) {
    if (!(alpha > 1.0)) throw std::invalid_argument("wang_field: requires alpha > 1");
    if (!(beta > 0.0)) throw std::invalid_argument("wang_field: requires beta > 0");
    if (n < 2) throw std::invalid_argument("wang_field: requires n >= 2");

    auto split = [n](const Eigen::VectorXd& x) {
        return std::make_pair(x.head(n - 1).norm(), x[n - 1]);
    };
    AnalyticField f(n, [alpha, beta, split](const Eigen::VectorXd& x) {
        const auto [rho, xn] = split(x);
        if (rho == 0.0) return 0.0;
        const double t = xn / std::pow(rho, alpha);
        return bump_eta(t) * std::pow(rho, beta);
    });
    f.with_gradient([alpha, beta, n, split](const Eigen::VectorXd& x) {
        Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
        const auto [rho, xn] = split(x);
        if (rho == 0.0) return g;
        const double t = xn / std::pow(rho, alpha);
        if (std::abs(t) >= 1.0) return g;
        const double eta = bump_eta(t), etap = bump_eta_deriv(t);
        const double rb = std::pow(rho, beta);
        for (int i = 0; i < n - 1; ++i)
            g[i] = etap * (-alpha * t * x[i] / (rho * rho)) * rb +
                   eta * beta * std::pow(rho, beta - 2.0) * x[i];
        g[n - 1] = etap * std::pow(rho, beta - alpha);
        return g;
    });
    return f;
}

AnalyticField power_transform(const AnalyticField& f, double inv_p) {
    if (!(inv_p > 0.0)) throw std::invalid_argument("power_transform: requires inv_p > 0");
    const int n = f.dimension();
    const double q = inv_p;
    auto base = [f](const Eigen::VectorXd& x) {
        const double v = f.value(x);
        if (v < 0.0)
            throw std::domain_error("power_transform: negative base at " + point_string(x));
        return v;
    };
    AnalyticField out(
        n,
        [base, q](const Eigen::VectorXd& x) {
            const double v = base(x);
            return v == 0.0 ? 0.0 : std::pow(v, q);
        },
        f.fd_step());
    out.with_gradient([f, base, q, n](const Eigen::VectorXd& x) {
        const double v = base(x);
        if (v == 0.0) return Eigen::VectorXd::Zero(n).eval();
        return (q * std::pow(v, q - 1.0) * f.gradient(x)).eval();
    });
    out.with_hessian([f, base, q, n](const Eigen::VectorXd& x) {
        const double v = base(x);
        if (v == 0.0) return SymmetricMatrix(n);
        const Eigen::VectorXd g = f.gradient(x);
        Eigen::MatrixXd h = q * std::pow(v, q - 1.0) * f.hessian(x).dense() +
                            q * (q - 1.0) * std::pow(v, q - 2.0) * (g * g.transpose());
        return SymmetricMatrix::from_dense(h);
    });
    return out;
}

// --- exponent regimes ---------------------------------------------------

ExponentProfile exponent_profile(int k, ExponentRegime regime) {
    if (k < 2) throw std::invalid_argument("exponent_profile: requires k >= 2");
    ExponentProfile p;
    p.k = k;
    p.regime = regime;
    switch (regime) {
        case ExponentRegime::C11_sharp: p.p = k - 1.0; break;
        case ExponentRegime::C21_sharp: p.p = (2.0 * k - 2.0) / 3.0; break;
        case ExponentRegime::C21_relaxed: p.p = 2.0 * k / 3.0; break;
        case ExponentRegime::ConcavityNatural: p.p = k; break;
    }
    return p;
}

ExponentRegime exponent_regime_from_name(const std::string& name) {
    if (name == "C11_sharp") return ExponentRegime::C11_sharp;
    if (name == "C21_sharp") return ExponentRegime::C21_sharp;
    if (name == "C21_relaxed") return ExponentRegime::C21_relaxed;
    if (name == "concavity_natural") return ExponentRegime::ConcavityNatural;
    throw std::invalid_argument("unknown exponent regime '" + name + "'");
}

std::string exponent_regime_name(ExponentRegime r) {
    switch (r) {
        case ExponentRegime::C11_sharp: return "C11_sharp";
        case ExponentRegime::C21_sharp: return "C21_sharp";
        case ExponentRegime::C21_relaxed: return "C21_relaxed";
        case ExponentRegime::ConcavityNatural: return "concavity_natural";
    }
    return "?";
}

ThresholdClassification threshold_classify(double alpha, double beta, int k) {
    if (!(alpha > 1.0)) throw std::invalid_argument("threshold_classify: requires alpha > 1");
    if (k < 2) throw std::invalid_argument("threshold_classify: requires k >= 2");
    ThresholdClassification c;
    c.threshold = 2.0 * (k - 1.0) * (alpha - 1.0);
    const double tol = 1e-12 * std::max(1.0, c.threshold);
    if (beta < c.threshold - tol)
        c.regime = ThresholdRegime::Subcritical;
    else if (beta > c.threshold + tol)
        c.regime = ThresholdRegime::Supercritical;
    else
        c.regime = ThresholdRegime::Critical;
    c.c11_exponent = 1.0 / (k - 1.0 - (2.0 * k - 1.0) / (2.0 * alpha));
    c.c21_exponent = 1.0 / (2.0 * (k - 1.0) / 3.0 - (2.0 * k - 1.0) / (3.0 * alpha));
    return c;
}

std::string threshold_regime_name(ThresholdRegime r) {
    switch (r) {
        case ThresholdRegime::Subcritical: return "subcritical";
        case ThresholdRegime::Critical: return "critical";
        case ThresholdRegime::Supercritical: return "supercritical";
    }
    return "?";
}

// --- probes -------------------------------------------------------------

ProbeReport c11_quotient_sup(const AnalyticField& g,
                             const std::vector<Eigen::VectorXd>& omega, double floor) {
    if (!(floor > 0.0)) throw std::invalid_argument("c11_quotient_sup: floor must be > 0");
    if (omega.empty()) throw std::invalid_argument("c11_quotient_sup: empty sample set");
    ProbeReport r;
    r.sample_count = static_cast<int>(omega.size());
    for (const auto& x : omega) {
        const double v = g.value(x);
        if (v <= 0.0)
            throw std::domain_error("c11_quotient_sup: g <= 0 at " + point_string(x));
        const double q = g.gradient(x).squaredNorm() / std::max(v, floor);
        r.sup_c11_quotient = std::max(r.sup_c11_quotient, q);
    }
    return r;
}

ProbeReport c21_defect_inf(const AnalyticField& g, double alpha,
                           const std::vector<Eigen::VectorXd>& omega,
                           const std::vector<Eigen::VectorXd>& directions, double floor) {
    if (!(alpha < 0.5)) throw std::invalid_argument("c21_defect_inf: requires alpha < 1/2");
    if (!(floor > 0.0)) throw std::invalid_argument("c21_defect_inf: floor must be > 0");
    if (omega.empty() || directions.empty())
        throw std::invalid_argument("c21_defect_inf: empty sample or direction set");
    ProbeReport r;
    r.alpha = alpha;
    r.sample_count = static_cast<int>(omega.size());
    r.inf_c21_defect = std::numeric_limits<double>::infinity();
    for (const auto& x : omega) {
        const double v = g.value(x);
        if (v <= 0.0)
            throw std::domain_error("c21_defect_inf: g <= 0 at " + point_string(x));
        const double vf = std::max(v, floor);
        const Eigen::VectorXd grad = g.gradient(x);
        const SymmetricMatrix hess = g.hessian(x);
        for (const auto& e : directions) {
            const double dee = e.dot(hess.dense() * e);
            const double de = grad.dot(e);
            const double defect = (dee - alpha * de * de / vf) / std::cbrt(vf);
            r.inf_c21_defect = std::min(r.inf_c21_defect, defect);
        }
    }
    return r;
}

double holder_probe(const AnalyticField& g, int order,
                    const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& pairs) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("holder_probe: order must be 1 or 2");
    if (pairs.size() < 8)
        throw std::invalid_argument("holder_probe: insufficient data, need >= 8 pairs");
    // least-squares slope of log|D^m g(x) - D^m g(y)| against log|x - y|
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int used = 0;
    for (const auto& [a, b] : pairs) {
        const double dist = (a - b).norm();
        if (dist <= 0.0) continue;
        double diff;
        if (order == 1)
            diff = (g.gradient(a) - g.gradient(b)).norm();
        else
            diff = (g.hessian(a).dense() - g.hessian(b).dense()).norm();
        if (diff <= 1e-300) continue;
        const double lx = std::log(dist), ly = std::log(diff);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++used;
    }
    if (used < 2) throw std::invalid_argument("holder_probe: insufficient usable pairs");
    const double denom = used * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("holder_probe: degenerate distances");
    return (used * sxy - sx * sy) / denom;
}

// --- sample-set builders --------------------------------------------------

std::vector<Eigen::VectorXd> interval_samples(double a, double b, int count) {
    if (count < 1) throw std::invalid_argument("interval_samples: count must be >= 1");
    std::vector<Eigen::VectorXd> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Eigen::VectorXd x(1);
        x[0] = count == 1 ? a : a + (b - a) * i / (count - 1);
        out.push_back(x);
    }
    return out;
}

std::vector<Eigen::VectorXd> box_samples(int n, double hw, int count) {
    if (count < 1 || n < 1) throw std::invalid_argument("box_samples: bad parameters");
    std::vector<Eigen::VectorXd> out;
    std::vector<int> idx(n, 0);
    while (true) {
        Eigen::VectorXd x(n);
        for (int d = 0; d < n; ++d)
            x[d] = count == 1 ? -hw : -hw + 2.0 * hw * idx[d] / (count - 1);
        out.push_back(x);
        int d = 0;
        while (d < n && ++idx[d] == count) idx[d++] = 0;
        if (d == n) break;
    }
    return out;
}

std::vector<Eigen::VectorXd> wang_support_samples(double alpha, int n, double rho_min,
                                                  double rho_max, int rho_count,
                                                  int s_count, double s_max) {
    if (!(rho_min > 0.0) || !(rho_max > rho_min))
        throw std::invalid_argument("wang_support_samples: bad radius range");
    std::vector<Eigen::VectorXd> out;
    const double lr0 = std::log(rho_min), lr1 = std::log(rho_max);
    for (int i = 0; i < rho_count; ++i) {
        const double rho =
            std::exp(rho_count == 1 ? lr0 : lr0 + (lr1 - lr0) * i / (rho_count - 1));
        for (int j = 0; j < s_count; ++j) {
            const double s = s_count == 1 ? 0.0 : -s_max + 2.0 * s_max * j / (s_count - 1);
            for (double sign : {1.0, -1.0}) {
                Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
                x[0] = sign * rho;
                x[n - 1] = s * std::pow(rho, alpha);
                out.push_back(x);
                if (n > 2) break; // both signs only add information on the 1-d x' slice
            }
        }
    }
    return out;
}

std::vector<Eigen::VectorXd> axis_directions(int n) {
    std::vector<Eigen::VectorXd> out;
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
        e[i] = 1.0;
        out.push_back(e);
    }
    return out;
}

std::vector<Eigen::VectorXd> random_unit_directions(int n, int count,
                                                    unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Eigen::VectorXd> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = gauss(rng);
        const double nrm = v.norm();
        if (nrm > 1e-8) out.push_back(v / nrm);
    }
    return out;
}

} // namespace khess
