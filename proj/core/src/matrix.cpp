#include "hullkit/matrix.hpp"

namespace hullkit {

const char* to_string(InnerKind kind) {
    return kind == InnerKind::Euclidean ? "euclidean" : "hermitian";
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Matrix Matrix::identity(const FieldPtr& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_enc(i, i, 1);
    return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || !a.field_->same_field(*b.field_)) throw DimensionMismatch();
    Matrix m(a.field_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) m.set_enc(i, j, a.enc_at(i, j));
        for (std::size_t j = 0; j < b.cols_; ++j) m.set_enc(i, a.cols_ + j, b.enc_at(i, j));
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_ || !a.field_->same_field(*b.field_)) throw DimensionMismatch();
    Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) m.set_enc(i, j, a.enc_at(i, j));
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) m.set_enc(a.rows_ + i, j, b.enc_at(i, j));
    return m;
}

FieldElement Matrix::at(std::size_t r, std::size_t c) const {
    return {field_, e_[r * cols_ + c]};
}

void Matrix::set(std::size_t r, std::size_t c, const FieldElement& v) {
    if (!v.field()->same_field(*field_)) throw FieldMismatch();
    e_[r * cols_ + c] = v.enc();
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set_enc(j, i, enc_at(i, j));
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    Matrix m(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m.set_enc(i, j, enc_at(r0 + i, c0 + j));
    return m;
}

bool Matrix::is_zero() const {
    for (std::uint32_t v : e_)
        if (v != 0) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (enc_at(i, j) != enc_at(j, i)) return false;
    return true;
}

bool Matrix::is_hermitian() const {
    if (rows_ != cols_ || !field_->has_conjugation()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (enc_at(i, j) != field_->conj_enc(enc_at(j, i))) return false;
    return true;
}

bool Matrix::has_zero_diagonal() const {
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        if (enc_at(i, i) != 0) return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_ &&
           a.field_->same_field(*b.field_);
}

namespace {

void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.field()->same_field(*b.field()))
        throw DimensionMismatch();
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    const FieldSpec& f = *a.field();
    Matrix m(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.set_enc(i, j, f.add_enc(a.enc_at(i, j), b.enc_at(i, j)));
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    const FieldSpec& f = *a.field();
    Matrix m(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.set_enc(i, j, f.sub_enc(a.enc_at(i, j), b.enc_at(i, j)));
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || !a.field()->same_field(*b.field())) throw DimensionMismatch();
    const FieldSpec& f = *a.field();
    Matrix m(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const std::uint32_t x = a.enc_at(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const std::uint32_t y = b.enc_at(l, j);
                if (y == 0) continue;
                m.set_enc(i, j, f.add_enc(m.enc_at(i, j), f.mul_enc(x, y)));
            }
        }
    }
    return m;
}

Matrix operator-(const Matrix& a) {
    const FieldSpec& f = *a.field();
    Matrix m(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.set_enc(i, j, f.neg_enc(a.enc_at(i, j)));
    return m;
}

Matrix operator*(const FieldElement& s, const Matrix& a) {
    if (!s.field()->same_field(*a.field())) throw FieldMismatch();
    const FieldSpec& f = *a.field();
    Matrix m(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.set_enc(i, j, f.mul_enc(s.enc(), a.enc_at(i, j)));
    return m;
}

Matrix star(const Matrix& m, InnerKind kind) {
    if (kind == InnerKind::Euclidean) return m.transpose();
    if (!m.field()->has_conjugation()) throw NotAHermitianField();
    const FieldSpec& f = *m.field();
    Matrix t(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t.set_enc(j, i, f.conj_enc(m.enc_at(i, j)));
    return t;
}

Matrix gram(const Matrix& g, InnerKind kind) {
    return g * star(g, kind);
}

std::size_t rank(const Matrix& m) {
    Matrix a = m;
    const FieldSpec& f = *a.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a.enc_at(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const std::uint32_t tmp = a.enc_at(r, j);
            a.set_enc(r, j, a.enc_at(piv, j));
            a.set_enc(piv, j, tmp);
        }
        const std::uint32_t inv = f.inv_enc(a.enc_at(r, c));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            const std::uint32_t factor = f.mul_enc(a.enc_at(i, c), inv);
            if (factor == 0) continue;
            for (std::size_t j = c; j < a.cols(); ++j)
                a.set_enc(i, j, f.sub_enc(a.enc_at(i, j), f.mul_enc(factor, a.enc_at(r, j))));
        }
        ++r;
    }
    return r;
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    const FieldSpec& f = *a.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a.enc_at(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const std::uint32_t tmp = a.enc_at(r, j);
            a.set_enc(r, j, a.enc_at(piv, j));
            a.set_enc(piv, j, tmp);
        }
        const std::uint32_t inv = f.inv_enc(a.enc_at(r, c));
        for (std::size_t j = 0; j < a.cols(); ++j) a.set_enc(r, j, f.mul_enc(inv, a.enc_at(r, j)));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            const std::uint32_t factor = a.enc_at(i, c);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.set_enc(i, j, f.sub_enc(a.enc_at(i, j), f.mul_enc(factor, a.enc_at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {a, pivots};
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw SingularMatrix();
    const std::size_t n = m.rows();
    const auto res = rref(Matrix::hstack(m, Matrix::identity(m.field(), n)));
    for (std::size_t i = 0; i < res.pivots.size(); ++i)
        if (res.pivots[i] != i) throw SingularMatrix();
    if (res.pivots.size() != n) throw SingularMatrix();
    return res.matrix.block(0, n, n, n);
}

Matrix solve_left_kernel(const Matrix& m) {
    // Row-reduce [M | I]; the rows whose M-part vanished carry a left-kernel basis.
    const std::size_t k = m.rows();
    const auto res = rref(Matrix::hstack(m, Matrix::identity(m.field(), k)));
    std::size_t lead = 0;
    while (lead < res.pivots.size() && res.pivots[lead] < m.cols()) ++lead;
    Matrix basis(m.field(), k - lead, k);
    for (std::size_t i = lead; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            basis.set_enc(i - lead, j, res.matrix.enc_at(i, m.cols() + j));
    return basis;
}

Matrix solve_left(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || !a.field()->same_field(*b.field())) throw DimensionMismatch();
    const std::size_t k = a.rows();
    const auto res = rref(Matrix::hstack(a.transpose(), b.transpose()));
    if (res.pivots.size() < k) throw SingularMatrix();
    for (std::size_t i = 0; i < k; ++i)
        if (res.pivots[i] != i) throw SingularMatrix();
    if (res.pivots.size() > k)
        throw Error("solve_left: right-hand side is not in the row space");
    return res.matrix.block(0, k, k, b.rows()).transpose();
}

}  // namespace hullkit
