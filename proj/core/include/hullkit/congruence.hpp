#pragma once

#include <optional>
#include <string>

#include "hullkit/matrix.hpp"

namespace hullkit {

enum class CanonKind {
    HermitianDiag,    // diag(I_r, O)
    OddSquare,        // diag(I_r, O), odd q
    OddNonSquare,     // diag(I_{r-1}, z, O), odd q, z the canonical nonsquare
    EvenAlternating,  // diag(J, ..., J, O) with r/2 blocks J = [[0,1],[1,0]], q = 2^m
    EvenIdentity,     // diag(I_r, O), q = 2^m
};

const char* to_string(CanonKind kind);

/// Congruence canonical form tag: which family plus the rank (and for the
/// odd nonsquare family, the canonical nonsquare z of the field).
struct CanonicalForm {
    CanonKind kind;
    std::size_t rank;
    std::optional<FieldElement> z;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.kind == b.kind && a.rank == b.rank && a.z == b.z;
    }
    friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) { return !(a == b); }
};

/// The n x n matrix a CanonicalForm denotes.
Matrix materialize(const CanonicalForm& form, std::size_t n, const FieldPtr& field);

/// Invertible P together with a form tag such that A = P * Canon * star(P).
struct CongruenceWitness {
    Matrix P;
    CanonicalForm form;
    InnerKind kind;

    Matrix canonical_matrix() const { return materialize(form, P.rows(), P.field()); }
};

/// Canonical form of a Hermitian matrix: diag(I_r, O).
///
/// Recursive elimination. A nonzero diagonal pivot always lies in the fixed
/// subfield and is normalized to 1 through a norm equation. When the leading
/// block has an all-zero diagonal but a nonzero entry A[i][j], adding a
/// multiple c of row j onto row i (with the conjugate column operation) puts
/// c*conj(a) + conj(c*conj(a)) on the diagonal; the trace to the fixed
/// subfield is onto, so some c in the encoding scan makes that nonzero.
CongruenceWitness diagonalize_hermitian(const Matrix& a);

/// Canonical form of a symmetric matrix over a field of odd order:
/// diag(I_r, O) or diag(I_{r-1}, z, O), decided by whether the product of the
/// pivots after plain symmetric diagonalization is a square.
CongruenceWitness diagonalize_symmetric_odd(const Matrix& a);

/// Canonical form of a symmetric matrix over a field of characteristic 2:
/// J-blocks when the diagonal is identically zero (alternating), diag(I_r, O)
/// otherwise.
CongruenceWitness canonize_char2(const Matrix& a);

}  // namespace hullkit
