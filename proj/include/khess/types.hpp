#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace khess {

/// Ordered real eigenvalue tuple; the argument of sigma_k and cone tests.
struct Spectrum {
    Eigen::VectorXd values;

    Spectrum() = default;
    explicit Spectrum(Eigen::VectorXd v) : values(std::move(v)) {}
    Spectrum(std::initializer_list<double> v) : values(Eigen::Map<const Eigen::VectorXd>(v.begin(), static_cast<Eigen::Index>(v.size()))) {}

    int dim() const { return static_cast<int>(values.size()); }
    bool finite() const { return values.allFinite(); }

    /// Componentwise shift lam - m*(1,...,1); the caller-side robustness margin.
    Spectrum shifted(double m) const { return Spectrum(values.array() - m); }
};

/// Dense n x n real symmetric matrix. Storage keeps entries (i,j) and (j,i)
/// bit-identical: writes go through set(), reads through operator().
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int n) : m_(Eigen::MatrixXd::Zero(n, n)) {}

    static SymmetricMatrix identity(int n) {
        SymmetricMatrix a(n);
        a.m_ = Eigen::MatrixXd::Identity(n, n);
        return a;
    }

    /// Copies the upper triangle onto the lower one, so symmetry holds exactly
    /// even if the input drifted by roundoff.
    static SymmetricMatrix from_dense(const Eigen::MatrixXd& m) {
        SymmetricMatrix a(static_cast<int>(m.rows()));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = i; j < m.cols(); ++j) {
                a.m_(i, j) = m(i, j);
                a.m_(j, i) = m(i, j);
            }
        return a;
    }

    int dim() const { return static_cast<int>(m_.rows()); }
    double operator()(int i, int j) const { return m_(i, j); }

    void set(int i, int j, double v) {
        m_(i, j) = v;
        m_(j, i) = v;
    }

    const Eigen::MatrixXd& dense() const { return m_; }
    bool finite() const { return m_.allFinite(); }
    double trace() const { return m_.trace(); }

    SymmetricMatrix operator+(const SymmetricMatrix& o) const { return wrap(m_ + o.m_); }
    SymmetricMatrix operator-(const SymmetricMatrix& o) const { return wrap(m_ - o.m_); }
    SymmetricMatrix operator*(double t) const { return wrap(m_ * t); }
    friend SymmetricMatrix operator*(double t, const SymmetricMatrix& a) { return a * t; }

private:
    static SymmetricMatrix wrap(Eigen::MatrixXd m) {
        SymmetricMatrix a;
        a.m_ = std::move(m);
        return a;
    }
    Eigen::MatrixXd m_;
};

/// Outcome of a Garding-cone membership test: member iff sigma_j > 0 for
/// j = 1..k (strict, no tolerance slack).
struct ConeVerdict {
    bool member = false;
    std::optional<int> first_failing_j; // smallest failing index, 1-based
    std::vector<double> sigma_values;   // (sigma_1, ..., sigma_k)
};

} // namespace khess
