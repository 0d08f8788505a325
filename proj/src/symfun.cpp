#include "khess/symfun.hpp"

#include "khess/errors.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace khess {

namespace {

void check_finite(const SymmetricMatrix& A, const char* who) {
    if (!A.finite()) throw std::domain_error(std::string(who) + ": non-finite entries");
}

void check_k_range(int k, int n, int lo, const char* who) {
    if (k < lo || k > n) {
        std::ostringstream os;
        os << who << ": k=" << k << " outside [" << lo << "," << n << "]";
        throw std::domain_error(os.str());
    }
}

Spectrum eig2(const SymmetricMatrix& A) {
    const double a = A(0, 0), b = A(0, 1), c = A(1, 1);
    const double m = 0.5 * (a + c);
    const double d = std::hypot(0.5 * (a - c), b);
    Eigen::VectorXd v(2);
    v << m - d, m + d;
    return Spectrum(v);
}

// Trigonometric roots of the characteristic cubic of a symmetric 3x3.
Spectrum eig3(const SymmetricMatrix& A) {
    const double p1 = A(0, 1) * A(0, 1) + A(0, 2) * A(0, 2) + A(1, 2) * A(1, 2);
    Eigen::VectorXd v(3);
    if (p1 == 0.0) {
        v << A(0, 0), A(1, 1), A(2, 2);
        std::sort(v.data(), v.data() + 3);
        return Spectrum(v);
    }
    const double q = A.trace() / 3.0;
    const double p2 = (A(0, 0) - q) * (A(0, 0) - q) + (A(1, 1) - q) * (A(1, 1) - q) +
                      (A(2, 2) - q) * (A(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    Eigen::Matrix3d B = (A.dense() - q * Eigen::Matrix3d::Identity()) / p;
    double r = B.determinant() / 2.0;
    r = std::clamp(r, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double hi = q + 2.0 * p * std::cos(phi);
    const double lo = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
    const double mid = 3.0 * q - hi - lo;
    v << lo, mid, hi;
    return Spectrum(v);
}

// det of an m x m dense block, m <= 3 closed form, else LU.
double small_det(const Eigen::MatrixXd& M) {
    switch (M.rows()) {
        case 0: return 1.0;
        case 1: return M(0, 0);
        case 2: return M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
        case 3:
            return M(0, 0) * (M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1)) -
                   M(0, 1) * (M(1, 0) * M(2, 2) - M(1, 2) * M(2, 0)) +
                   M(0, 2) * (M(1, 0) * M(2, 1) - M(1, 1) * M(2, 0));
        default: return M.determinant();
    }
}

double cofactor(const Eigen::MatrixXd& M, int p, int q) {
    const int m = static_cast<int>(M.rows());
    Eigen::MatrixXd sub(m - 1, m - 1);
    for (int i = 0, si = 0; i < m; ++i) {
        if (i == p) continue;
        for (int j = 0, sj = 0; j < m; ++j) {
            if (j == q) continue;
            sub(si, sj) = M(i, j);
            ++sj;
        }
        ++si;
    }
    const double sign = ((p + q) % 2 == 0) ? 1.0 : -1.0;
    return sign * small_det(sub);
}

// Visits every k-subset of {0,...,n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::string verdict_message(const char* who, const ConeVerdict& v) {
    std::ostringstream os;
    os << who << ": spectrum outside Gamma_k";
    if (v.first_failing_j) os << " (sigma_" << *v.first_failing_j << " <= 0)";
    return os.str();
}

} // namespace

Spectrum eigenvalues(const SymmetricMatrix& A) {
    check_finite(A, "eigenvalues");
    const int n = A.dim();
    if (n == 1) return Spectrum(A.dense().diagonal());
    if (n == 2) return eig2(A);
    if (n == 3) return eig3(A);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A.dense(), Eigen::EigenvaluesOnly);
    return Spectrum(es.eigenvalues());
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

double sigma_elem(const Spectrum& lam, int k) {
    const int n = lam.dim();
    check_k_range(k, n, 0, "sigma_elem");
    if (!lam.finite()) throw std::domain_error("sigma_elem: non-finite entries");
    if (k == 0) return 1.0;
    // e_j(lam_1..lam_i) built by one pass of the generating-polynomial update.
    std::vector<double> e(k + 1, 0.0);
    e[0] = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::min(i + 1, k); j >= 1; --j) e[j] += e[j - 1] * lam.values[i];
    return e[k];
}

double sigma_minor(const SymmetricMatrix& A, int k) {
    const int n = A.dim();
    check_k_range(k, n, 0, "sigma_minor");
    check_finite(A, "sigma_minor");
    if (k == 0) return 1.0;
    double sum = 0.0;
    for_each_subset(n, k, [&](const std::vector<int>& s) {
        Eigen::MatrixXd M(k, k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) M(a, b) = A(s[a], s[b]);
        sum += small_det(M);
    });
    return sum;
}

Eigen::VectorXd sigma_partial(const Spectrum& lam, int k) {
    const int n = lam.dim();
    check_k_range(k, n, 1, "sigma_partial");
    Eigen::VectorXd out(n);
    Eigen::VectorXd rest(n - 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0, t = 0; j < n; ++j)
            if (j != i) rest[t++] = lam.values[j];
        out[i] = sigma_elem(Spectrum(rest), k - 1);
    }
    return out;
}

SymmetricMatrix sigma_minor_grad(const SymmetricMatrix& A, int k) {
    const int n = A.dim();
    check_k_range(k, n, 1, "sigma_minor_grad");
    check_finite(A, "sigma_minor_grad");
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
    for_each_subset(n, k, [&](const std::vector<int>& s) {
        Eigen::MatrixXd M(k, k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) M(a, b) = A(s[a], s[b]);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) g(s[a], s[b]) += cofactor(M, a, b);
    });
    return SymmetricMatrix::from_dense(g);
}

ConeVerdict in_gamma(const Spectrum& lam, int k) {
    check_k_range(k, lam.dim(), 1, "in_gamma");
    ConeVerdict v;
    v.member = true;
    v.sigma_values.reserve(k);
    for (int j = 1; j <= k; ++j) {
        const double s = sigma_elem(lam, j);
        v.sigma_values.push_back(s);
        if (v.member && !(s > 0.0)) {
            v.member = false;
            v.first_failing_j = j;
        }
    }
    return v;
}

ConeVerdict in_gamma(const SymmetricMatrix& A, int k) { return in_gamma(eigenvalues(A), k); }

double hessian_op(const SymmetricMatrix& A, int k) {
    check_k_range(k, A.dim(), 1, "hessian_op");
    const double sk = sigma_minor(A, k);
    if (sk < 0.0) throw admissibility_error(verdict_message("hessian_op", in_gamma(A, k)));
    return std::pow(sk, 1.0 / k);
}

SymmetricMatrix hessian_op_grad(const SymmetricMatrix& A, int k) {
    check_k_range(k, A.dim(), 1, "hessian_op_grad");
    const double sk = sigma_minor(A, k);
    if (!(sk > 0.0))
        throw admissibility_error(verdict_message("hessian_op_grad", in_gamma(A, k)));
    const double scale = std::pow(sk, (1.0 - k) / k) / k;
    return scale * sigma_minor_grad(A, k);
}

SymmetricMatrix normalized_g_matrix(const SymmetricMatrix& A, int k) {
    SymmetricMatrix fij = hessian_op_grad(A, k);
    const double t = fij.trace();
    if (!(t > 1e-300)) throw degeneracy_error("normalized_g_matrix: tr F^{ij} underflow");
    SymmetricMatrix g = fij * (1.0 / t);
    return g * (1.0 / g.trace());
}

double trace_identity_residual(const SymmetricMatrix& A, int k) {
    const int n = A.dim();
    check_k_range(k, n, 1, "trace_identity_residual");
    const double lhs = sigma_minor_grad(A, k).trace();
    const double skm1 = sigma_minor(A, k - 1);
    return std::abs(lhs - (n - k + 1) * skm1) / std::max(1.0, std::abs(skm1));
}

double maclaurin_gap(const SymmetricMatrix& A, int k) {
    check_k_range(k, A.dim(), 2, "maclaurin_gap");
    const ConeVerdict v = in_gamma(A, k);
    if (!v.member) throw admissibility_error(verdict_message("maclaurin_gap", v));
    const double sk = sigma_minor(A, k);
    const double skm1 = sigma_minor(A, k - 1);
    return std::pow(sk, 1.0 / k) / std::pow(skm1, 1.0 / (k - 1));
}

double newton_lower_gap(const SymmetricMatrix& A, int k) {
    check_k_range(k, A.dim(), 2, "newton_lower_gap");
    const ConeVerdict v = in_gamma(A, k);
    if (!v.member || !(sigma_minor(A, k) > 0.0))
        throw admissibility_error(verdict_message("newton_lower_gap", v));
    const double s1 = sigma_minor(A, 1);
    const double sk = sigma_minor(A, k);
    const double skm1 = sigma_minor(A, k - 1);
    const double e = 1.0 / (k - 1);
    return skm1 / (std::pow(s1, e) * std::pow(sk, (k - 2.0) * e));
}

double concavity_witness(const SymmetricMatrix& A, const SymmetricMatrix& B,
                         double theta, int k) {
    check_k_range(k, A.dim(), 1, "concavity_witness");
    if (A.dim() != B.dim()) throw std::domain_error("concavity_witness: dimension mismatch");
    const ConeVerdict va = in_gamma(A, k);
    if (!va.member) throw admissibility_error(verdict_message("concavity_witness: A", va));
    const ConeVerdict vb = in_gamma(B, k);
    if (!vb.member) throw admissibility_error(verdict_message("concavity_witness: B", vb));
    const SymmetricMatrix mix = theta * A + (1.0 - theta) * B;
    return hessian_op(mix, k) - theta * hessian_op(A, k) - (1.0 - theta) * hessian_op(B, k);
}

double spectral_norm(const SymmetricMatrix& A) {
    const Spectrum s = eigenvalues(A);
    return s.values.cwiseAbs().maxCoeff();
}

} // namespace khess
