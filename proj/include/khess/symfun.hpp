#pragma once

// Exact algebra of the elementary symmetric functions sigma_k of eigenvalues,
// the concave operator F = sigma_k^{1/k}, its derivative matrices F^{ij} and
// their unit-trace normalization G, plus the structural-inequality oracles
// (Maclaurin gap, Newton-type lower gap, concavity witness, trace identity)
// used as checkable diagnostics throughout the solver and harness.

#include "khess/types.hpp"

namespace khess {

/// Eigenvalues of a symmetric matrix, ascending. Closed-form characteristic
/// roots for n = 2 and n = 3; symmetric-tridiagonal reduction for n >= 4.
Spectrum eigenvalues(const SymmetricMatrix& A);

/// Binomial coefficient C(n, k) as a double (n small).
double binomial(int n, int k);

/// k-th elementary symmetric polynomial of the tuple; sigma_0 == 1.
/// Throws std::domain_error unless 0 <= k <= n.
double sigma_elem(const Spectrum& lam, int k);

/// sigma_k[A] as the sum of all k x k principal minors of A.
/// Agrees with sigma_elem(eigenvalues(A), k) up to floating roundoff.
double sigma_minor(const SymmetricMatrix& A, int k);

/// (d sigma_k / d lambda_1, ..., d sigma_k / d lambda_n); component i equals
/// sigma_{k-1} of the tuple with entry i removed. Requires 1 <= k <= n.
Eigen::VectorXd sigma_partial(const Spectrum& lam, int k);

/// Matrix derivative sigma_k^{ij}[A] = d sigma_minor(A,k) / d A_{ij},
/// computed by cofactor expansion of the principal minors (entries treated
/// as independent, evaluated at symmetric A). Requires 1 <= k <= n.
SymmetricMatrix sigma_minor_grad(const SymmetricMatrix& A, int k);

/// Garding cone membership: sigma_j(lam) > 0 strictly for j = 1..k.
ConeVerdict in_gamma(const Spectrum& lam, int k);
ConeVerdict in_gamma(const SymmetricMatrix& A, int k);

/// F[A] = sigma_k[A]^{1/k}; 1-homogeneous. Throws admissibility_error
/// (carrying the cone verdict) when sigma_k[A] < 0.
double hessian_op(const SymmetricMatrix& A, int k);

/// F^{ij}[A] = (1/k) sigma_k^{(1-k)/k}[A] sigma_k^{ij}[A]; positive definite
/// for lam(A) strictly inside Gamma_k. Throws admissibility_error when
/// sigma_k[A] <= 0.
SymmetricMatrix hessian_op_grad(const SymmetricMatrix& A, int k);

/// G = F^{ij}[A] / tr F^{ij}[A], renormalized so tr(G) = 1 exactly.
/// Throws degeneracy_error when tr F^{ij} underflows.
SymmetricMatrix normalized_g_matrix(const SymmetricMatrix& A, int k);

/// | sum_i sigma_k^{ii}[A] - (n-k+1) sigma_{k-1}[A] | / max(1, |sigma_{k-1}[A]|).
/// Vanishes identically up to roundoff for every finite symmetric A.
double trace_identity_residual(const SymmetricMatrix& A, int k);

/// Ratio sigma_k^{1/k} / sigma_{k-1}^{1/(k-1)} on Gamma_k, 2 <= k <= n.
/// The normalized Maclaurin inequality bounds it by
/// C(n,k)^{1/k} / C(n,k-1)^{1/(k-1)}.
double maclaurin_gap(const SymmetricMatrix& A, int k);

/// sigma_{k-1} / (sigma_1^{1/(k-1)} sigma_k^{(k-2)/(k-1)}) on Gamma_k with
/// sigma_k > 0; scale-invariant, identically 1 at k = 2.
double newton_lower_gap(const SymmetricMatrix& A, int k);

/// F[theta A + (1-theta) B] - theta F[A] - (1-theta) F[B]; nonnegative up to
/// roundoff since F is concave on the cone. Both arguments must be admissible.
double concavity_witness(const SymmetricMatrix& A, const SymmetricMatrix& B,
                         double theta, int k);

/// Spectral norm max |lambda_i(A)|.
double spectral_norm(const SymmetricMatrix& A);

} // namespace khess
