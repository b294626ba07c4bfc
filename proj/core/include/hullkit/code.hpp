#pragma once

#include "hullkit/congruence.hpp"

namespace hullkit {

/// [n,k] linear code over one finite field, given by a full-row-rank
/// generator matrix (not necessarily in standard form).
class LinearCode {
public:
    explicit LinearCode(Matrix generator);

    const FieldPtr& field() const { return g_.field(); }
    std::size_t n() const { return g_.cols(); }
    std::size_t k() const { return g_.rows(); }
    const Matrix& generator() const { return g_; }

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.g_ == b.g_; }
    friend bool operator!=(const LinearCode& a, const LinearCode& b) { return !(a == b); }

private:
    Matrix g_;
};

/// The four Euclidean Gram-congruence families: for odd q the canonical form
/// of -G G^T is all-square (Eos) or ends in a nonsquare (Eons); for q = 2^m
/// the Gram matrix is alternating (Eea) or not (Eena).
enum class CodeTypeTag { Eos, Eons, Eea, Eena };

const char* to_string(CodeTypeTag tag);

/// Classification result; keeps the witness so embedding constructions do not
/// recompute the diagonalization.
struct CodeType {
    CodeTypeTag tag;
    CongruenceWitness witness;  // of -G G^T for odd q, of G G^T for q = 2^m
};

/// dim(C ∩ C^dual), computed as k - rank(G G*).
std::size_t hull_dimension(const LinearCode& c, InnerKind kind);

/// Basis of Hull(C) = C ∩ C^dual as rows: solves x * gram(G) = 0 and maps the
/// kernel through x -> x*G. Row count equals hull_dimension; tests treat that
/// equality (plus explicit membership of each row) as the oracle.
Matrix hull_basis(const LinearCode& c, InnerKind kind);

/// Generator of the same code whose first ell rows generate the hull; the
/// Gram matrix of the remaining block is invertible.
Matrix hull_first_generator(const LinearCode& c, InnerKind kind);

constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t(1) << 24;

/// q^k, saturating at 2^63 so callers can compare against bounds safely.
std::uint64_t codeword_count(const LinearCode& c);

/// Exact minimum Hamming weight by enumerating all q^k - 1 nonzero codewords.
/// Throws TooLargeToEnumerate when q^k exceeds max_words.
std::size_t minimum_distance(const LinearCode& c,
                             std::uint64_t max_words = kDefaultEnumerationBound);

/// Euclidean four-way classification by the Gram congruence class.
CodeType classify(const LinearCode& c);

}  // namespace hullkit
