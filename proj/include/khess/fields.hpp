#pragma once

// Analytic scalar-field models used as right-hand sides and boundary data:
// a small catalog (constant, quadratic, radial_power, wang, product,
// power_of), exponent-regime bookkeeping, and sampling probes for the
// pointwise quotient/defect inequalities that govern degenerate data.

#include "khess/types.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace khess {

/// Scalar field on R^n with exact derivatives where supplied and central
/// finite differences (step fd_step) otherwise.
class AnalyticField {
public:
    using ValueFn = std::function<double(const Eigen::VectorXd&)>;
    using GradFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
    using HessFn = std::function<SymmetricMatrix(const Eigen::VectorXd&)>;

    AnalyticField() = default;
    AnalyticField(int dim, ValueFn value, double fd_step = 1e-5);

    AnalyticField& with_gradient(GradFn g);
    AnalyticField& with_hessian(HessFn h);

    int dimension() const { return dim_; }
    double fd_step() const { return fd_step_; }
    bool has_analytic_gradient() const { return static_cast<bool>(grad_); }
    bool has_analytic_hessian() const { return static_cast<bool>(hess_); }

    double value(const Eigen::VectorXd& x) const;
    /// Analytic gradient when present; otherwise central differences of value.
    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const;
    /// Analytic Hessian when present; otherwise central differences of the
    /// gradient map (which itself may be analytic), symmetrized.
    SymmetricMatrix hessian(const Eigen::VectorXd& x) const;

private:
    int dim_ = 0;
    ValueFn value_;
    GradFn grad_;
    HessFn hess_;
    double fd_step_ = 1e-5;
};

// --- catalog -----------------------------------------------------------

AnalyticField constant_field(int n, double c);
/// a |x|^2 + c
AnalyticField quadratic_field(int n, double a, double c = 0.0);
/// a |x|^m (continuous extension 0 at the origin for m > 0)
AnalyticField radial_power_field(int n, double a, double m);
AnalyticField product_field(const AnalyticField& f, const AnalyticField& g);

/// Smooth even bump e^{-1/(1-t^2)} on (-1,1), zero outside; peak value e^{-1}.
double bump_eta(double t);

/// The compactly supported degenerate model eta(x_n/|x'|^alpha) |x'|^beta,
/// extended by 0 on the axis |x'| = 0. Requires alpha > 1, beta > 0.
AnalyticField wang_field(double alpha, double beta, int n);

/// Pointwise power f^{inv_p} with chain-rule derivatives; 0 maps to 0,
/// negative values of f raise std::domain_error at evaluation.
AnalyticField power_transform(const AnalyticField& f, double inv_p);

// --- exponent regimes ---------------------------------------------------

enum class ExponentRegime { C11_sharp, C21_sharp, C21_relaxed, ConcavityNatural };

struct ExponentProfile {
    int k = 2;
    ExponentRegime regime = ExponentRegime::ConcavityNatural;
    double p = 2.0; // k-1, (2k-2)/3, 2k/3, or k depending on regime
};

ExponentProfile exponent_profile(int k, ExponentRegime regime);
ExponentRegime exponent_regime_from_name(const std::string& name);
std::string exponent_regime_name(ExponentRegime r);

enum class ThresholdRegime { Subcritical, Critical, Supercritical };

/// Where (alpha, beta) sits relative to the blow-up threshold
/// beta = 2(k-1)(alpha-1), plus the two sharp exponents attached to the
/// borderline choice beta = 2(k-1)(alpha-1) - 1.
struct ThresholdClassification {
    ThresholdRegime regime = ThresholdRegime::Critical;
    double threshold = 0.0;     // 2(k-1)(alpha-1)
    double c11_exponent = 0.0;  // 1 / (k-1 - (2k-1)/(2 alpha))
    double c21_exponent = 0.0;  // 1 / (2(k-1)/3 - (2k-1)/(3 alpha))
};

ThresholdClassification threshold_classify(double alpha, double beta, int k);
std::string threshold_regime_name(ThresholdRegime r);

// --- probes -------------------------------------------------------------

struct ProbeReport {
    double sup_c11_quotient = 0.0; // sup |grad g|^2 / g over samples
    double inf_c21_defect = 0.0;   // inf (d_ee g - alpha |d_e g|^2/g) / g^{1/3}
    int sample_count = 0;
    double alpha = 0.0;
};

/// sup over samples of |grad g|^2 / max(g, floor). Throws std::domain_error
/// (naming the point) when g <= 0 at a sample.
ProbeReport c11_quotient_sup(const AnalyticField& g,
                             const std::vector<Eigen::VectorXd>& omega,
                             double floor);

/// inf over samples and unit directions of
/// (d_ee g - alpha |d_e g|^2 / max(g,floor)) / max(g,floor)^{1/3}.
/// Requires alpha < 1/2.
ProbeReport c21_defect_inf(const AnalyticField& g, double alpha,
                           const std::vector<Eigen::VectorXd>& omega,
                           const std::vector<Eigen::VectorXd>& directions,
                           double floor);

/// Least-squares slope of log difference-quotient vs log distance for the
/// order-th derivative (order 1: gradient, order 2: Hessian, Frobenius norm).
/// Diagnostic only; requires at least 8 pairs.
double holder_probe(const AnalyticField& g, int order,
                    const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& pairs);

// --- sample-set builders --------------------------------------------------

/// count points evenly spaced on [a, b], endpoints included, as 1-d samples.
std::vector<Eigen::VectorXd> interval_samples(double a, double b, int count);

/// Tensor grid over the box [-hw, hw]^n with count points per axis,
/// endpoints included.
std::vector<Eigen::VectorXd> box_samples(int n, double hw, int count);

/// Samples strictly inside the support {|x_n| < |x'|^alpha} of wang_field:
/// radii log-spaced in [rho_min, rho_max], scaled offsets s in
/// (-s_max, s_max), x_n = s rho^alpha. For n = 2 both signs of x' are used.
std::vector<Eigen::VectorXd> wang_support_samples(double alpha, int n,
                                                  double rho_min, double rho_max,
                                                  int rho_count, int s_count,
                                                  double s_max = 0.9);

std::vector<Eigen::VectorXd> axis_directions(int n);
std::vector<Eigen::VectorXd> random_unit_directions(int n, int count,
                                                    unsigned long long seed);

} // namespace khess
