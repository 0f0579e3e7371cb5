#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liegeo {

using Vec = std::vector<double>;

// Library-wide default tolerances; every CLI entry point lets callers override them.
inline constexpr double kDefaultJacobiTol = 1e-10;  // relative to the largest |c_ij^k|
inline constexpr double kDefaultCompareTol = 1e-9;  // absolute, on max-norm differences
inline constexpr double kDegeneracyEps = 1e-12;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FactorizationError : Error {
    using Error::Error;
};
struct DegeneracyError : Error {
    using Error::Error;
};
struct DegeneratePlaneError : Error {
    using Error::Error;
};

// Dense row-major matrix. Everything in this project stays tiny (dim <= ~16
// after lifting), so dense storage is used throughout.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return a_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const Mat&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec a_;
};

class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t n) : n_(n), a_(n * n * n, 0.0) {}

    std::size_t dim() const { return n_; }
    double& operator()(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * n_ + j) * n_ + k]; }
    double operator()(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * n_ + j) * n_ + k]; }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    bool operator==(const Tensor3&) const = default;

private:
    std::size_t n_ = 0;
    Vec a_;
};

class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(std::size_t n) : n_(n), a_(n * n * n * n, 0.0) {}

    std::size_t dim() const { return n_; }
    double& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return a_[((i * n_ + j) * n_ + k) * n_ + l];
    }
    double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return a_[((i * n_ + j) * n_ + k) * n_ + l];
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    std::size_t n_ = 0;
    Vec a_;
};

inline Vec zeros(std::size_t n) { return Vec(n, 0.0); }

inline Vec basis_vector(std::size_t n, std::size_t i) {
    Vec v(n, 0.0);
    v[i] = 1.0;
    return v;
}

inline void axpy(Vec& y, double alpha, const Vec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

inline Vec scaled(const Vec& x, double alpha) {
    Vec r(x);
    for (double& v : r) v *= alpha;
    return r;
}

inline Vec vadd(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec vsub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline double edot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double max_abs(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double max_abs_diff(const Vec& a, const Vec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline Vec matvec(const Mat& m, const Vec& x) {
    Vec r(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * x[j];
    return r;
}

// x^T g y
inline double bilinear(const Mat& g, const Vec& x, const Vec& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) s += x[i] * g(i, j) * y[j];
    return s;
}

// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
// compute() returns nullopt when a pivot is non-positive, which is how the
// validation layer probes definiteness without throwing.
class CholeskyFactor {
public:
    static std::optional<CholeskyFactor> compute(const Mat& a) {
        const std::size_t n = a.rows();
        Mat l(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                double sum = a(i, j);
                for (std::size_t k = 0; k < j; ++k) sum -= l(i, k) * l(j, k);
                if (i == j) {
                    if (!(sum > 0.0)) return std::nullopt;
                    l(i, i) = std::sqrt(sum);
                } else {
                    l(i, j) = sum / l(j, j);
                }
            }
        }
        return CholeskyFactor(std::move(l));
    }

    // Solves (L L^T) w = rhs by forward then back substitution.
    Vec solve(const Vec& rhs) const {
        const std::size_t n = l_.rows();
        Vec y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double s = rhs[i];
            for (std::size_t k = 0; k < i; ++k) s -= l_(i, k) * y[k];
            y[i] = s / l_(i, i);
        }
        Vec w(n, 0.0);
        for (std::size_t ii = n; ii-- > 0;) {
            double s = y[ii];
            for (std::size_t k = ii + 1; k < n; ++k) s -= l_(k, ii) * w[k];
            w[ii] = s / l_(ii, ii);
        }
        return w;
    }

    const Mat& lower() const { return l_; }

private:
    explicit CholeskyFactor(Mat l) : l_(std::move(l)) {}
    Mat l_;
};

}  // namespace liegeo
