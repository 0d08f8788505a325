#include "khess/fields.hpp"

#include "khess/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace khess;

namespace {

Eigen::VectorXd pt(std::initializer_list<double> v) {
    return Eigen::Map<const Eigen::VectorXd>(v.begin(), static_cast<Eigen::Index>(v.size()));
}

} // namespace

TEST_SUITE_BEGIN("fields");

TEST_CASE("bump_eta shape") {
    CHECK(bump_eta(0.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(bump_eta(1.0) == 0.0);
    CHECK(bump_eta(-1.3) == 0.0);
    CHECK(bump_eta(0.5) == doctest::Approx(bump_eta(-0.5)));
    for (double t = -1.2; t <= 1.2; t += 0.05) {
        CHECK(bump_eta(t) >= 0.0);
        CHECK(bump_eta(t) <= std::exp(-1.0) + 1e-15);
    }
}

TEST_CASE("wang_field values and support") {
    const double alpha = 4.0, beta = 5.0;
    AnalyticField f = wang_field(alpha, beta, 2);

    // on the cutoff surface x_n = |x'|^alpha the bump vanishes
    CHECK(f.value(pt({0.5, std::pow(0.5, alpha)})) == 0.0);
    // midplane value
    CHECK(f.value(pt({0.5, 0.0})) ==
          doctest::Approx(std::exp(-1.0) * std::pow(0.5, beta)));
    // the axis |x'| = 0 is a zero of the extension
    CHECK(f.value(pt({0.0, 0.3})) == 0.0);

    // nonnegative, support inside {|x_n| < |x'|^alpha}
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        Eigen::VectorXd x = pt({u(rng), u(rng)});
        const double v = f.value(x);
        CHECK(v >= 0.0);
        if (v > 0.0) CHECK(std::abs(x[1]) < std::pow(std::abs(x[0]), alpha));
    }
    CHECK_THROWS_AS(wang_field(0.9, 1.0, 2), std::invalid_argument);
}

TEST_CASE("wang_field gradient is self-consistent with finite differences") {
    AnalyticField f = wang_field(4.0, 5.0, 3);
    REQUIRE(f.has_analytic_gradient());
    std::vector<Eigen::VectorXd> pts = {pt({0.5, 0.1, 0.01}), pt({0.4, -0.3, -0.002}),
                                        pt({-0.6, 0.2, 0.05})};
    for (const auto& x : pts) {
        const Eigen::VectorXd g = f.gradient(x);
        Eigen::VectorXd fd(3);
        const double h = 1e-6;
        for (int i = 0; i < 3; ++i) {
            Eigen::VectorXd xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            fd[i] = (f.value(xp) - f.value(xm)) / (2 * h);
        }
        CHECK((g - fd).norm() <= 1e-5 * std::max(1.0, fd.norm()));
    }
}

TEST_CASE("threshold_classify") {
    ThresholdClassification c = threshold_classify(4.0, 5.0, 2);
    CHECK(c.regime == ThresholdRegime::Subcritical);
    CHECK(c.threshold == doctest::Approx(6.0));

    c = threshold_classify(4.0, 6.0, 2);
    CHECK(c.regime == ThresholdRegime::Critical);

    c = threshold_classify(4.0, 7.0, 2);
    CHECK(c.regime == ThresholdRegime::Supercritical);

    // sharp exponents at k = 2, alpha = 4: 1/(1 - 3/8) and 1/(2/3 - 1/4)
    CHECK(c.c11_exponent == doctest::Approx(8.0 / 5.0));
    CHECK(c.c21_exponent == doctest::Approx(12.0 / 5.0));
    CHECK_THROWS_AS(threshold_classify(1.0, 1.0, 2), std::invalid_argument);
}

TEST_CASE("exponent profiles") {
    CHECK(exponent_profile(3, ExponentRegime::C11_sharp).p == doctest::Approx(2.0));
    CHECK(exponent_profile(3, ExponentRegime::C21_sharp).p == doctest::Approx(4.0 / 3.0));
    CHECK(exponent_profile(3, ExponentRegime::C21_relaxed).p == doctest::Approx(2.0));
    CHECK(exponent_profile(3, ExponentRegime::ConcavityNatural).p == doctest::Approx(3.0));
    CHECK(exponent_regime_from_name("C21_sharp") == ExponentRegime::C21_sharp);
    CHECK_THROWS_AS(exponent_regime_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("power_transform pointwise and round trip") {
    AnalyticField one = constant_field(2, 1.0);
    AnalyticField g1 = power_transform(one, 0.37);
    CHECK(g1.value(pt({0.2, 0.9})) == doctest::Approx(1.0));

    AnalyticField r4 = radial_power_field(2, 1.0, 4.0);
    AnalyticField r2 = power_transform(r4, 0.5);
    CHECK(r2.value(pt({0.3, 0.4})) == doctest::Approx(0.25)); // |x| = 0.5

    AnalyticField w = wang_field(4.0, 5.0, 2);
    AnalyticField wp = power_transform(w, 1.0 / 3.0);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    for (int i = 0; i < 300; ++i) {
        Eigen::VectorXd x = pt({u(rng), u(rng)});
        CHECK(wp.value(x) ==
              doctest::Approx(std::pow(w.value(x), 1.0 / 3.0)).epsilon(1e-12));
    }

    // round trip f -> f^{1/p} -> (f^{1/p})^p
    AnalyticField back = power_transform(power_transform(r4, 1.0 / 3.0), 3.0);
    for (int i = 0; i < 100; ++i) {
        Eigen::VectorXd x = pt({u(rng), u(rng)});
        const double want = r4.value(x);
        if (want > 0.0)
            CHECK(back.value(x) == doctest::Approx(want).epsilon(1e-10));
    }

    AnalyticField neg = constant_field(2, -1.0);
    AnalyticField bad = power_transform(neg, 0.5);
    CHECK_THROWS_AS(bad.value(pt({0.0, 0.0})), std::domain_error);
}

TEST_CASE("power_transform chain-rule derivatives match finite differences") {
    AnalyticField base = quadratic_field(2, 1.0, 0.5); // |x|^2 + 1/2 > 0
    AnalyticField g = power_transform(base, 0.4);
    const Eigen::VectorXd x = pt({0.3, -0.7});
    AnalyticField plain(2, [&](const Eigen::VectorXd& y) {
        return std::pow(base.value(y), 0.4);
    }, 1e-6);
    CHECK((g.gradient(x) - plain.gradient(x)).norm() <= 1e-7);
    CHECK((g.hessian(x).dense() - plain.hessian(x).dense()).norm() <= 1e-4);
}

TEST_CASE("c11 quotient: exact value for g = x^2 and constants") {
    AnalyticField sq = radial_power_field(1, 1.0, 2.0);
    // even count avoids the exact zero of g at the origin
    auto omega = interval_samples(-0.99, 0.99, 100);
    ProbeReport r = c11_quotient_sup(sq, omega, 1e-14);
    CHECK(r.sup_c11_quotient == doctest::Approx(4.0).epsilon(1e-9));

    AnalyticField c = constant_field(1, 3.0);
    CHECK(c11_quotient_sup(c, omega, 1e-14).sup_c11_quotient == doctest::Approx(0.0));
}

TEST_CASE("c11 quotient diverges on shrinking collars for g(x) = x") {
    AnalyticField lin(1, [](const Eigen::VectorXd& x) { return x[0]; });
    double prev = 0.0;
    for (double eps : {1e-1, 1e-2, 1e-3}) {
        ProbeReport r = c11_quotient_sup(lin, interval_samples(eps, 1.0, 64), 1e-14);
        CHECK(r.sup_c11_quotient == doctest::Approx(1.0 / eps).epsilon(1e-9));
        if (prev > 0.0) CHECK(r.sup_c11_quotient >= 9.99 * prev);
        prev = r.sup_c11_quotient;
    }
    // g <= 0 in the sample set is a domain error
    CHECK_THROWS_AS(c11_quotient_sup(lin, interval_samples(-0.5, 1.0, 7), 1e-14),
                    std::domain_error);
}

TEST_CASE("c11 chain-rule identity: quotient of h^2 equals 4 |grad h|^2") {
    AnalyticField h(2, [](const Eigen::VectorXd& x) { return 2.0 + x[0] + 0.3 * x[1] * x[1]; });
    AnalyticField hh(2, [](const Eigen::VectorXd& x) {
        const double v = 2.0 + x[0] + 0.3 * x[1] * x[1];
        return v * v;
    });
    auto omega = box_samples(2, 0.5, 11);
    const double sup_quot = c11_quotient_sup(hh, omega, 1e-14).sup_c11_quotient;
    double sup_grad = 0.0;
    for (const auto& x : omega) sup_grad = std::max(sup_grad, 4.0 * h.gradient(x).squaredNorm());
    CHECK(sup_quot == doctest::Approx(sup_grad).epsilon(1e-6));
}

TEST_CASE("c21 defect: signs, reductions, stability") {
    AnalyticField sq = radial_power_field(1, 1.0, 2.0);
    auto omega = interval_samples(-0.99, 0.99, 100);
    auto dirs = axis_directions(1);
    ProbeReport r = c21_defect_inf(sq, 1.0 / 3.0, omega, dirs, 1e-14);
    CHECK(r.inf_c21_defect >= 0.0); // (2 - 4/3)/x^{2/3} > 0

    AnalyticField c = constant_field(1, 2.0);
    CHECK(c21_defect_inf(c, 0.3, omega, dirs, 1e-14).inf_c21_defect == doctest::Approx(0.0));

    CHECK_THROWS_AS(c21_defect_inf(sq, 0.5, omega, dirs, 1e-14), std::invalid_argument);

    // alpha = 0 reduces to inf d_ee g / g^{1/3}; check against direct evaluation
    AnalyticField bump(2, [](const Eigen::VectorXd& x) {
        const double s = 1.0 - x.squaredNorm();
        return s * s * s * s;
    });
    auto omega2 = box_samples(2, 0.35, 9);
    auto dirs2 = axis_directions(2);
    ProbeReport rz = c21_defect_inf(bump, 0.0, omega2, dirs2, 1e-14);
    double direct = std::numeric_limits<double>::infinity();
    for (const auto& x : omega2) {
        const SymmetricMatrix hh = bump.hessian(x);
        for (const auto& e : dirs2)
            direct = std::min(direct, e.dot(hh.dense() * e) / std::cbrt(bump.value(x)));
    }
    CHECK(rz.inf_c21_defect == doctest::Approx(direct).epsilon(1e-8));

    // sampling-density stability on the smooth bump at alpha = 0.4
    ProbeReport lo = c21_defect_inf(bump, 0.4, box_samples(2, 0.45, 12), dirs2, 1e-14);
    ProbeReport hi = c21_defect_inf(bump, 0.4, box_samples(2, 0.45, 24), dirs2, 1e-14);
    CHECK(std::isfinite(lo.inf_c21_defect));
    CHECK(std::abs(hi.inf_c21_defect - lo.inf_c21_defect) <=
          0.05 * std::max(1.0, std::abs(lo.inf_c21_defect)));
}

TEST_CASE("holder_probe recovers exponents") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.02, 1.0);

    // order 1 on x^2: gradient is Lipschitz with exponent exactly 1
    AnalyticField sq = radial_power_field(1, 1.0, 2.0);
    std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> pairs;
    for (int i = 0; i < 200; ++i) {
        Eigen::VectorXd a(1), b(1);
        a[0] = u(rng);
        b[0] = u(rng);
        pairs.emplace_back(a, b);
    }
    CHECK(holder_probe(sq, 1, pairs) == doctest::Approx(1.0).epsilon(0.1));

    // order 2 on |x|^3 near zero: second derivative ~ 6|x|, exponent 1
    AnalyticField cube = radial_power_field(1, 1.0, 3.0);
    CHECK(holder_probe(cube, 2, pairs) == doctest::Approx(1.0).epsilon(0.1));

    // wang power at the sharp line k=2, alpha=4, beta=5: strict Holder loss.
    // The loss is visible across the thin support: pair the midplane with a
    // point offset by a fraction of the local width |x'|^alpha.
    AnalyticField w = power_transform(wang_field(4.0, 5.0, 2), 1.0);
    std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> wpairs;
    for (int i = 0; i < 40; ++i) {
        const double rho = 0.04 * std::pow(0.5 / 0.04, i / 39.0);
        Eigen::VectorXd a = Eigen::VectorXd::Zero(2), b = Eigen::VectorXd::Zero(2);
        a[0] = rho;
        b[0] = rho;
        b[1] = 0.5 * std::pow(rho, 4.0);
        wpairs.emplace_back(a, b);
    }
    const double fitted = holder_probe(w, 1, wpairs);
    CHECK(fitted < 1.0);
    CHECK(fitted > 0.0);

    std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> few(pairs.begin(),
                                                                 pairs.begin() + 5);
    CHECK_THROWS_AS(holder_probe(sq, 1, few), std::invalid_argument);
}

TEST_CASE("field catalog derivative self-consistency") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    std::vector<AnalyticField> fields = {
        quadratic_field(2, 0.7, 0.2), radial_power_field(2, 1.3, 4.0),
        product_field(quadratic_field(2, 1.0, 1.0), radial_power_field(2, 1.0, 2.0))};
    for (const auto& f : fields)
        for (int i = 0; i < 20; ++i) {
            Eigen::VectorXd x(2);
            x << u(rng), u(rng);
            if (x.norm() < 0.05) continue;
            Eigen::VectorXd fd(2);
            const double h = 1e-6;
            for (int d = 0; d < 2; ++d) {
                Eigen::VectorXd xp = x, xm = x;
                xp[d] += h;
                xm[d] -= h;
                fd[d] = (f.value(xp) - f.value(xm)) / (2 * h);
            }
            CHECK((f.gradient(x) - fd).norm() <= 1e-5 * std::max(1.0, fd.norm()));
        }
}

TEST_SUITE_END();
