#pragma once

#include <cstddef>
#include <vector>

#include "hullkit/field.hpp"

namespace hullkit {

/// Which inner product a Gram matrix or dual is taken with. Hermitian is only
/// meaningful over fields of even extension degree.
enum class InnerKind { Euclidean, Hermitian };

const char* to_string(InnerKind kind);

/// Dense matrix over one finite field. Entries are stored as raw encodings;
/// all arithmetic is exact. Immutable by convention once built (the setters
/// exist for construction code).
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);  // zero-filled

    static Matrix identity(const FieldPtr& field, std::size_t n);
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const FieldElement& v);

    std::uint32_t enc_at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set_enc(std::size_t r, std::size_t c, std::uint32_t v) { e_[r * cols_ + c] = v; }

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_hermitian() const;
    bool has_zero_diagonal() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> e_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const FieldElement& s, const Matrix& a);

/// Transpose (Euclidean) or conjugate transpose (Hermitian).
Matrix star(const Matrix& m, InnerKind kind);

/// G * star(G).
Matrix gram(const Matrix& g, InnerKind kind);

/// Row rank by Gaussian elimination with first-nonzero pivot selection.
std::size_t rank(const Matrix& m);

struct RrefResult {
    Matrix matrix;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

/// Canonical reduced row-echelon form.
RrefResult rref(const Matrix& m);

Matrix inverse(const Matrix& m);

/// Basis (as rows) of the left kernel {u : u*M = 0}.
Matrix solve_left_kernel(const Matrix& m);

/// X with X*A = B, for A of full row rank and B inside the row space of A.
Matrix solve_left(const Matrix& a, const Matrix& b);

}  // namespace hullkit
