#include "hullkit/congruence.hpp"

#include <array>

namespace hullkit {

const char* to_string(CanonKind kind) {
    switch (kind) {
        case CanonKind::HermitianDiag: return "HermitianDiag";
        case CanonKind::OddSquare: return "OddSquare";
        case CanonKind::OddNonSquare: return "OddNonSquare";
        case CanonKind::EvenAlternating: return "EvenAlternating";
        case CanonKind::EvenIdentity: return "EvenIdentity";
    }
    return "?";
}

Matrix materialize(const CanonicalForm& form, std::size_t n, const FieldPtr& field) {
    Matrix m(field, n, n);
    switch (form.kind) {
        case CanonKind::HermitianDiag:
        case CanonKind::OddSquare:
        case CanonKind::EvenIdentity:
            for (std::size_t i = 0; i < form.rank; ++i) m.set_enc(i, i, 1);
            break;
        case CanonKind::OddNonSquare:
            for (std::size_t i = 0; i + 1 < form.rank; ++i) m.set_enc(i, i, 1);
            m.set_enc(form.rank - 1, form.rank - 1, form.z->enc());
            break;
        case CanonKind::EvenAlternating:
            for (std::size_t i = 0; i + 1 < form.rank; i += 2) {
                m.set_enc(i, i + 1, 1);
                m.set_enc(i + 1, i, 1);
            }
            break;
    }
    return m;
}

namespace {

// Applies congruence operations to a working copy C of A while accumulating
// the row transform E, maintaining C = E * A * star(E) throughout. The
// witness P = E^{-1} then satisfies A = P * C * star(P).
class Reducer {
public:
    Reducer(const Matrix& a, InnerKind kind)
        : c_(a), e_(Matrix::identity(a.field(), a.rows())), kind_(kind), f_(*a.field()) {}

    std::size_t size() const { return c_.rows(); }
    std::uint32_t at(std::size_t i, std::size_t j) const { return c_.enc_at(i, j); }
    const Matrix& canon() const { return c_; }
    Matrix witness() const { return inverse(e_); }

    // row i += factor * row j, plus the conjugate column operation
    void add(std::size_t i, std::size_t j, std::uint32_t factor) {
        if (factor == 0) return;
        row_add(c_, i, j, factor);
        row_add(e_, i, j, factor);
        col_add(c_, i, j, cj(factor));
    }

    void swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        row_swap(c_, i, j);
        row_swap(e_, i, j);
        for (std::size_t r = 0; r < size(); ++r) {
            const std::uint32_t tmp = c_.enc_at(r, i);
            c_.set_enc(r, i, c_.enc_at(r, j));
            c_.set_enc(r, j, tmp);
        }
    }

    // row i *= factor (factor nonzero)
    void scale(std::size_t i, std::uint32_t factor) {
        for (std::size_t j = 0; j < size(); ++j)
            c_.set_enc(i, j, f_.mul_enc(factor, c_.enc_at(i, j)));
        for (std::size_t j = 0; j < e_.cols(); ++j)
            e_.set_enc(i, j, f_.mul_enc(factor, e_.enc_at(i, j)));
        const std::uint32_t cf = cj(factor);
        for (std::size_t r = 0; r < size(); ++r) c_.set_enc(r, i, f_.mul_enc(cf, c_.enc_at(r, i)));
    }

    // rows idx <- T * rows idx (T a small invertible matrix given by rows of
    // encodings), plus the conjugate column operation
    void transform(const std::vector<std::size_t>& idx,
                   const std::vector<std::vector<std::uint32_t>>& t) {
        const std::size_t kk = idx.size();
        // rows of C and E
        for (Matrix* mp : {&c_, &e_}) {
            Matrix& m = *mp;
            std::vector<std::vector<std::uint32_t>> old(kk, std::vector<std::uint32_t>(m.cols()));
            for (std::size_t a = 0; a < kk; ++a)
                for (std::size_t j = 0; j < m.cols(); ++j) old[a][j] = m.enc_at(idx[a], j);
            for (std::size_t a = 0; a < kk; ++a)
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    std::uint32_t acc = 0;
                    for (std::size_t b = 0; b < kk; ++b)
                        acc = f_.add_enc(acc, f_.mul_enc(t[a][b], old[b][j]));
                    m.set_enc(idx[a], j, acc);
                }
        }
        // columns of C with conj(T)
        std::vector<std::vector<std::uint32_t>> old(kk, std::vector<std::uint32_t>(size()));
        for (std::size_t a = 0; a < kk; ++a)
            for (std::size_t r = 0; r < size(); ++r) old[a][r] = c_.enc_at(r, idx[a]);
        for (std::size_t a = 0; a < kk; ++a)
            for (std::size_t r = 0; r < size(); ++r) {
                std::uint32_t acc = 0;
                for (std::size_t b = 0; b < kk; ++b)
                    acc = f_.add_enc(acc, f_.mul_enc(cj(t[a][b]), old[b][r]));
                c_.set_enc(r, idx[a], acc);
            }
    }

    const FieldSpec& f() const { return f_; }

private:
    std::uint32_t cj(std::uint32_t x) const {
        return kind_ == InnerKind::Hermitian ? f_.conj_enc(x) : x;
    }

    static void row_add(Matrix& m, std::size_t i, std::size_t j, std::uint32_t factor) {
        const FieldSpec& f = *m.field();
        for (std::size_t c = 0; c < m.cols(); ++c)
            m.set_enc(i, c, f.add_enc(m.enc_at(i, c), f.mul_enc(factor, m.enc_at(j, c))));
    }

    static void row_swap(Matrix& m, std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::uint32_t tmp = m.enc_at(i, c);
            m.set_enc(i, c, m.enc_at(j, c));
            m.set_enc(j, c, tmp);
        }
    }

    void col_add(Matrix& m, std::size_t i, std::size_t j, std::uint32_t factor) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            m.set_enc(r, i, f_.add_enc(m.enc_at(r, i), f_.mul_enc(factor, m.enc_at(r, j))));
    }

    Matrix c_;
    Matrix e_;
    InnerKind kind_;
    const FieldSpec& f_;
};

// first j >= i with C[j][j] != 0, or size() if none
std::size_t find_diag_pivot(const Reducer& red, std::size_t i) {
    for (std::size_t j = i; j < red.size(); ++j)
        if (red.at(j, j) != 0) return j;
    return red.size();
}

// first (j1, j2), i <= j1 < j2, with C[j1][j2] != 0 in row-major order
bool find_offdiag(const Reducer& red, std::size_t i, std::size_t& j1, std::size_t& j2) {
    for (std::size_t a = i; a < red.size(); ++a)
        for (std::size_t b = a + 1; b < red.size(); ++b)
            if (red.at(a, b) != 0) {
                j1 = a;
                j2 = b;
                return true;
            }
    return false;
}

// Reduce the trailing alternating block starting at `start` to J-blocks.
// Returns one past the last row consumed by a J-block.
std::size_t symplectic_reduce(Reducer& red, std::size_t start) {
    const FieldSpec& f = red.f();
    std::size_t i = start;
    while (true) {
        std::size_t j1 = 0, j2 = 0;
        if (!find_offdiag(red, i, j1, j2)) break;
        red.swap(i, j1);  // j2 > j1 >= i, so the entry lands at (i, j2)
        red.swap(i + 1, j2);
        red.scale(i, f.inv_enc(red.at(i, i + 1)));
        for (std::size_t r = i + 2; r < red.size(); ++r) {
            if (red.at(r, i) != 0) red.add(r, i + 1, f.neg_enc(red.at(r, i)));
            if (red.at(r, i + 1) != 0) red.add(r, i, f.neg_enc(red.at(r, i + 1)));
        }
        i += 2;
    }
    return i;
}

}  // namespace

CongruenceWitness diagonalize_hermitian(const Matrix& a) {
    if (!a.is_hermitian()) throw NotHermitianSymmetric();
    Reducer red(a, InnerKind::Hermitian);
    const FieldSpec& f = red.f();
    const std::size_t k = red.size();
    std::size_t i = 0;
    for (; i < k; ++i) {
        std::size_t j = find_diag_pivot(red, i);
        if (j == k) {
            std::size_t j1 = 0, j2 = 0;
            if (!find_offdiag(red, i, j1, j2)) break;
            // put a nonzero value on the diagonal at j1: scan c so that the
            // trace c*conj(a) + conj(c*conj(a)) is nonzero
            const std::uint32_t av = red.at(j1, j2);
            for (std::uint32_t c = 1; c < f.q(); ++c) {
                const std::uint32_t t = f.mul_enc(c, f.conj_enc(av));
                if (f.add_enc(t, f.conj_enc(t)) != 0) {
                    red.add(j1, j2, c);
                    break;
                }
            }
            j = j1;
        }
        red.swap(i, j);
        const std::uint32_t d = red.at(i, i);
        for (std::size_t r = i + 1; r < k; ++r)
            if (red.at(r, i) != 0) red.add(r, i, f.neg_enc(f.div_enc(red.at(r, i), d)));
        // d lies in the fixed subfield; normalize it to 1 through the norm
        const FieldElement c = norm_solve(FieldElement(a.field(), d));
        red.scale(i, f.inv_enc(c.enc()));
    }
    return {red.witness(), CanonicalForm{CanonKind::HermitianDiag, i, std::nullopt},
            InnerKind::Hermitian};
}

CongruenceWitness diagonalize_symmetric_odd(const Matrix& a) {
    if (a.field()->p() == 2) throw EvenCharacteristic();
    if (!a.is_symmetric()) throw NotSymmetric();
    Reducer red(a, InnerKind::Euclidean);
    const FieldSpec& f = red.f();
    const std::size_t k = red.size();
    std::size_t r = 0;
    for (; r < k; ++r) {
        std::size_t j = find_diag_pivot(red, r);
        if (j == k) {
            std::size_t j1 = 0, j2 = 0;
            if (!find_offdiag(red, r, j1, j2)) break;
            red.add(j1, j2, 1);  // new diagonal entry 2*C[j1][j2] != 0 (odd q)
            j = j1;
        }
        red.swap(r, j);
        const std::uint32_t d = red.at(r, r);
        for (std::size_t i = r + 1; i < k; ++i)
            if (red.at(i, r) != 0) red.add(i, r, f.neg_enc(f.div_enc(red.at(i, r), d)));
    }
    // discriminant decides the family
    std::uint32_t disc = 1;
    for (std::size_t i = 0; i < r; ++i) disc = f.mul_enc(disc, red.at(i, i));
    const FieldElement z = a.field()->canonical_nonsquare();
    const bool square_disc = r == 0 || is_square(FieldElement(a.field(), disc));

    // rescale pivots: squares to 1, nonsquares to z
    std::vector<std::size_t> zpos;
    for (std::size_t i = 0; i < r; ++i) {
        const FieldElement d(a.field(), red.at(i, i));
        if (is_square(d)) {
            red.scale(i, f.inv_enc(sqrt(d).enc()));
        } else {
            red.scale(i, f.inv_enc(sqrt(d / z).enc()));
            zpos.push_back(i);
        }
    }
    // pairs of z-pivots are congruent to I_2: with z*x^2 + z*y^2 = 1 the
    // transform [[x, y], [-y, x]] maps diag(z, z) to diag(1, 1)
    for (std::size_t pi = 0; pi + 1 < zpos.size(); pi += 2) {
        std::uint32_t x = 0, y = 0;
        for (std::uint32_t cand = 0; cand < f.q(); ++cand) {
            const std::uint32_t rem =
                f.sub_enc(1, f.mul_enc(z.enc(), f.mul_enc(cand, cand)));
            if (rem == 0) continue;  // would need x^2 = 1/z, impossible
            const std::uint32_t ysq = f.div_enc(rem, z.enc());
            if (is_square(FieldElement(a.field(), ysq))) {
                x = cand;
                y = f.sqrt_enc(ysq);
                break;
            }
        }
        red.transform({zpos[pi], zpos[pi + 1]}, {{x, y}, {f.neg_enc(y), x}});
    }
    if (zpos.size() % 2 == 1) red.swap(zpos.back(), r - 1);

    CanonicalForm form = square_disc
                             ? CanonicalForm{CanonKind::OddSquare, r, std::nullopt}
                             : CanonicalForm{CanonKind::OddNonSquare, r, z};
    return {red.witness(), form, InnerKind::Euclidean};
}

CongruenceWitness canonize_char2(const Matrix& a) {
    if (a.field()->p() != 2) throw OddCharacteristic();
    if (!a.is_symmetric()) throw NotSymmetric();
    Reducer red(a, InnerKind::Euclidean);
    const FieldSpec& f = red.f();
    const std::size_t k = red.size();

    if (a.has_zero_diagonal()) {
        const std::size_t r = symplectic_reduce(red, 0);
        return {red.witness(), CanonicalForm{CanonKind::EvenAlternating, r, std::nullopt},
                InnerKind::Euclidean};
    }

    // pull unit pivots to the front
    std::size_t ones = 0;
    while (ones < k) {
        const std::size_t j = find_diag_pivot(red, ones);
        if (j == k) break;
        red.swap(ones, j);
        red.scale(ones, f.inv_enc(f.sqrt_enc(red.at(ones, ones))));
        for (std::size_t i = ones + 1; i < k; ++i)
            if (red.at(i, ones) != 0) red.add(i, ones, f.neg_enc(red.at(i, ones)));
        ++ones;
    }
    // the trailing block is alternating; reduce it to J-blocks
    const std::size_t end = symplectic_reduce(red, ones);

    // absorb each J into the identity: T * diag(1, J) * T^T = I_3
    const std::vector<std::vector<std::uint32_t>> t3 = {{1, 1, 1}, {1, 1, 0}, {1, 0, 1}};
    while (ones < end) {
        red.transform({ones - 1, ones, ones + 1}, t3);
        ones += 2;
    }
    return {red.witness(), CanonicalForm{CanonKind::EvenIdentity, ones, std::nullopt},
            InnerKind::Euclidean};
}

}  // namespace hullkit
