#include "dspectra/numlin.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>

namespace dspectra {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw SizeError("matrix dimensions must be non-negative");
    a_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_)
        throw SizeError("matrix product dimension mismatch");
    Matrix out(lhs.rows_, rhs.cols_);
    for (int i = 0; i < lhs.rows_; ++i) {
        for (int k = 0; k < lhs.cols_; ++k) {
            const double v = lhs(i, k);
            if (v == 0.0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out(i, j) += v * rhs(k, j);
        }
    }
    return out;
}

SymmetricMatrix::SymmetricMatrix(int order) : n_(order) {
    if (order < 1)
        throw SizeError("symmetric matrix order must be at least 1");
    a_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

void SymmetricMatrix::set(int i, int j, double value) {
    a_[static_cast<std::size_t>(i) * n_ + j] = value;
    a_[static_cast<std::size_t>(j) * n_ + i] = value;
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i)
        t += (*this)(i, i);
    return t;
}

double SymmetricMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_)
        m = std::max(m, std::abs(v));
    return m;
}

double SymmetricMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_)
        s += v * v;
    return std::sqrt(s);
}

double SymmetricMatrix::off_diagonal_norm() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j)
                s += (*this)(i, j) * (*this)(i, j);
    return std::sqrt(s);
}

Matrix SymmetricMatrix::to_dense() const {
    Matrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            m(i, j) = (*this)(i, j);
    return m;
}

Spectrum Spectrum::numeric(std::vector<double> vals) {
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return Spectrum{std::move(vals), Provenance::Numeric, {}};
}

Spectrum Spectrum::closed_form(std::vector<double> vals, std::vector<std::string> labs) {
    if (labs.size() != vals.size())
        throw LengthMismatchError("closed-form spectrum needs one label per value");
    std::vector<std::size_t> order(vals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    Spectrum s;
    s.provenance = Provenance::ClosedForm;
    s.values.reserve(vals.size());
    s.labels.reserve(vals.size());
    for (std::size_t idx : order) {
        s.values.push_back(vals[idx]);
        s.labels.push_back(labs[idx]);
    }
    return s;
}

double Spectrum::sum() const {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

double energy(const Spectrum& s) {
    double e = 0.0;
    for (double v : s.values)
        e += std::abs(v);
    return e;
}

MultisetComparison multiset_compare(const Spectrum& lhs, const Spectrum& rhs, double tol) {
    if (lhs.values.size() != rhs.values.size())
        throw LengthMismatchError("multiset comparison needs spectra of equal size");
    std::vector<double> a = lhs.values;
    std::vector<double> b = rhs.values;
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        gap = std::max(gap, std::abs(a[i] - b[i]));
    return MultisetComparison{gap <= tol, gap};
}

EigenDecomposition jacobi_eigensystem(const SymmetricMatrix& a, const JacobiOptions& opts) {
    if (opts.tol <= 0.0)
        throw SizeError("jacobi tolerance must be positive");
    const int n = a.order();
    std::vector<double> w(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w[static_cast<std::size_t>(i) * n + j] = a(i, j);
    auto at = [&](int i, int j) -> double& { return w[static_cast<std::size_t>(i) * n + j]; };

    Matrix v;
    if (opts.accumulate_vectors)
        v = Matrix::identity(n);

    const double norm = a.frobenius_norm();
    const double target = opts.tol * std::max(norm, 1e-300);

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s += 2.0 * at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    int sweep = 0;
    double off = off_norm();
    while (off > target) {
        if (sweep >= opts.max_sweeps)
            throw ConvergenceError("jacobi eigensolver: sweep budget exhausted before tolerance");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0)
                    continue;
                const double app = at(p, p);
                const double aqq = at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                // smaller-angle root of t^2 + 2 theta t - 1 = 0
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0)
                        t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(p, k) = at(k, p);
                    at(k, q) = s * akp + c * akq;
                    at(q, k) = at(k, q);
                }
                if (opts.accumulate_vectors) {
                    for (int k = 0; k < n; ++k) {
                        const double vkp = v(k, p);
                        const double vkq = v(k, q);
                        v(k, p) = c * vkp - s * vkq;
                        v(k, q) = s * vkp + c * vkq;
                    }
                }
            }
        }
        ++sweep;
        off = off_norm();
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return at(x, x) > at(y, y); });

    EigenDecomposition out;
    out.sweeps = sweep;
    out.values.resize(n);
    for (int i = 0; i < n; ++i)
        out.values[i] = at(order[i], order[i]);
    if (opts.accumulate_vectors) {
        out.vectors = Matrix(n, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

Spectrum eigen_sym(const SymmetricMatrix& a, double tol) {
    JacobiOptions opts;
    opts.tol = tol;
    opts.accumulate_vectors = false;
    return Spectrum::numeric(jacobi_eigensystem(a, opts).values);
}

namespace {

constexpr double kGramClampTol = 1e-10;

} // namespace

std::vector<double> singular_values(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        throw SizeError("singular values need a non-empty matrix");
    const bool rows_small = m.rows() <= m.cols();
    const int k = rows_small ? m.rows() : m.cols();
    SymmetricMatrix gram(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            double s = 0.0;
            if (rows_small) {
                for (int l = 0; l < m.cols(); ++l)
                    s += m(i, l) * m(j, l);
            } else {
                for (int l = 0; l < m.rows(); ++l)
                    s += m(l, i) * m(l, j);
            }
            gram.set(i, j, s);
        }
    }
    Spectrum eig = eigen_sym(gram);
    std::vector<double> sv;
    sv.reserve(eig.values.size());
    for (double lambda : eig.values) {
        if (lambda <= kGramClampTol)
            lambda = 0.0;
        sv.push_back(std::sqrt(lambda));
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

double Quartic::evaluate(double x) const {
    return (((x + c3) * x + c2) * x + c1) * x + c0;
}

double Quartic::coefficient_scale() const {
    return std::max({1.0, std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
}

std::array<double, 4> quartic_roots(const Quartic& q) {
    using cd = std::complex<double>;
    const cd coeff[5] = {1.0, q.c3, q.c2, q.c1, q.c0};
    auto eval = [&](cd z) {
        cd r = coeff[0];
        for (int i = 1; i < 5; ++i)
            r = r * z + coeff[i];
        return r;
    };

    // Cauchy-style inclusion radius for all roots.
    const double radius = 1.0 + std::max({std::abs(q.c3), std::abs(q.c2), std::abs(q.c1), std::abs(q.c0)});

    std::array<cd, 4> z;
    const cd seed(0.4, 0.9); // standard non-real seed, avoids symmetric stalls
    z[0] = seed * (0.5 * radius);
    for (int i = 1; i < 4; ++i)
        z[i] = z[i - 1] * seed;

    const double step_tol = 1e-14 * std::max(1.0, radius);
    const int max_iter = 600;
    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < 4; ++i) {
            cd denom = 1.0;
            for (int j = 0; j < 4; ++j)
                if (j != i)
                    denom *= z[i] - z[j];
            const cd delta = eval(z[i]) / denom;
            z[i] -= delta;
            max_step = std::max(max_step, std::abs(delta));
        }
        converged = max_step <= step_tol;
    }
    if (!converged)
        throw ConvergenceError("quartic root iteration failed to settle");

    const double imag_tol = 1e-7 * std::max(1.0, radius);
    for (const cd& r : z) {
        if (std::abs(r.imag()) > imag_tol)
            throw ComplexRootError("quartic has a root with non-negligible imaginary part");
    }

    std::array<double, 4> roots{};
    for (int i = 0; i < 4; ++i)
        roots[i] = z[i].real();
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

} // namespace dspectra
