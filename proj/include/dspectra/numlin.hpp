#pragma once

#include <array>
#include <string>
#include <vector>

#include "dspectra/errors.hpp"

namespace dspectra {

// Dense rectangular matrix, row-major. Used for eigenvector accumulation and
// the rectangular vertex-edge incidence matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transposed() const;

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

// Dense symmetric matrix. set() mirrors across the diagonal so the storage can
// never go asymmetric.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int order);

    int order() const { return n_; }

    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double value);
    void add(int i, int j, double value) { set(i, j, (*this)(i, j) + value); }

    double trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    double off_diagonal_norm() const;

    Matrix to_dense() const;

private:
    int n_ = 0;
    std::vector<double> a_;
};

enum class Provenance { ClosedForm, Numeric };

// An eigenvalue (or singular-value-derived) multiset, held in descending
// order. Closed-form spectra carry a per-value label naming the clause that
// produced it; numeric spectra are unlabeled.
struct Spectrum {
    std::vector<double> values;
    Provenance provenance = Provenance::Numeric;
    std::vector<std::string> labels; // empty, or one per value

    static Spectrum numeric(std::vector<double> vals);
    static Spectrum closed_form(std::vector<double> vals, std::vector<std::string> labs);

    std::size_t size() const { return values.size(); }
    double sum() const;
};

// Total absolute value of the spectrum.
double energy(const Spectrum& s);

struct MultisetComparison {
    bool equal = false;
    double max_gap = 0.0; // max |sorted difference|
};

// Compare two spectra as multisets: sort both descending, take the largest
// elementwise gap. LengthMismatchError if the sizes differ.
MultisetComparison multiset_compare(const Spectrum& lhs, const Spectrum& rhs, double tol);

struct JacobiOptions {
    double tol = 1e-12; // on off(A) relative to ||A||_F
    int max_sweeps = 100;
    bool accumulate_vectors = true;
};

struct EigenDecomposition {
    std::vector<double> values; // descending
    Matrix vectors;             // column i pairs with values[i]; empty if not accumulated
    int sweeps = 0;
};

// Cyclic Jacobi rotations. Deterministic for a given input; ConvergenceError
// if the sweep budget runs out before off(A) <= tol * ||A||_F.
EigenDecomposition jacobi_eigensystem(const SymmetricMatrix& a, const JacobiOptions& opts = {});

// Eigenvalues only, as a numeric Spectrum.
Spectrum eigen_sym(const SymmetricMatrix& a, double tol = 1e-12);

// Singular values of a rectangular matrix via the Gram matrix of the smaller
// side. Eigenvalues of the Gram matrix within 1e-10 of zero are clamped to
// exactly zero before the square root: integer matrices at this scale have no
// genuine singular values that small, and the clamp stops eigensolver noise
// from being amplified by the root.
std::vector<double> singular_values(const Matrix& m);

// Monic quartic x^4 + c3 x^3 + c2 x^2 + c1 x + c0.
struct Quartic {
    double c3 = 0.0;
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;

    double evaluate(double x) const;
    // Scale for relative residual tests: max |coefficient| over the monic form.
    double coefficient_scale() const;
};

// All four roots, descending, via simultaneous (Durand-Kerner) iteration.
// ComplexRootError if any root keeps a non-negligible imaginary part; the
// quartics produced by the quotient matrices here are similar to symmetric
// matrices, so real roots are guaranteed for valid inputs.
std::array<double, 4> quartic_roots(const Quartic& q);

} // namespace dspectra
