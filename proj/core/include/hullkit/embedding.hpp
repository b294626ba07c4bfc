#pragma once

#include <string>

#include "hullkit/code.hpp"

namespace hullkit {

/// Which case of the shortest-length formula applies.
enum class LengthBranch {
    AtHull,           // t = ell: the code itself, s = 0
    BelowHull,        // t < ell: s = ell - t
    HermitianAbove,   // Hermitian, t > ell: s = t - ell
    OddSquareAbove,   // Eos, t > ell: s = t - ell
    OddNonSquareMid,  // Eons, ell < t <= k-1: s = t - ell
    OddNonSquareTop,  // Eons, t = k: s = k - ell + 1
    EvenNonAltAbove,  // Eena, t > ell: s = t - ell
    EvenAltAbove,     // Eea, t > ell: s = t - ell + 1
};

const char* to_string(LengthBranch branch);

/// Exact shortest appended-column count for a t-dimensional hull embedding,
/// with the formula branch that produced it. Always s >= |t - ell|.
struct LengthVerdict {
    std::size_t s;
    LengthBranch branch;
};

/// An [n+s, k] code whose first n coordinates reproduce the input code and
/// whose hull dimension is t.
struct EmbeddingResult {
    LinearCode code;
    Matrix appended;  // the k x s block D with generator [G | D]
    std::size_t t;
    InnerKind kind;
    std::size_t s;
};

LengthVerdict shortest_length(const LinearCode& c, std::size_t t, InnerKind kind);

/// Dispatch to the Hermitian / odd Euclidean / even Euclidean construction.
EmbeddingResult embed(const LinearCode& c, std::size_t t, InnerKind kind);

EmbeddingResult embed_hermitian(const LinearCode& c, std::size_t t);
EmbeddingResult embed_euclidean_odd(const LinearCode& c, std::size_t t);
EmbeddingResult embed_euclidean_even(const LinearCode& c, std::size_t t);

// Overloads reusing a precomputed witness/classification (a sweep over all t
// diagonalizes once).
EmbeddingResult embed_hermitian(const LinearCode& c, std::size_t t,
                                const CongruenceWitness& wit);
EmbeddingResult embed_euclidean_odd(const LinearCode& c, std::size_t t, const CodeType& type);
EmbeddingResult embed_euclidean_even(const LinearCode& c, std::size_t t, const CodeType& type);

/// The recursive 2r x (2r+1) matrix over a characteristic-2 field with
/// P_r * P_r^T = diag(J, ..., J) (r blocks) and P_r * ones(2r+1, 2) = O.
Matrix build_Pr(std::size_t r, const FieldPtr& field);

/// Always-valid (but non-shortest) embedding of length n*p + k - t built by
/// repeating G p times and padding with an identity block; differential
/// reference for embed.
EmbeddingResult existence_pad(const LinearCode& c, std::size_t t, InnerKind kind);

/// Manual append: extend C by the given columns verbatim, requiring the
/// result to have hull dimension exactly t (AppendRejected otherwise).
EmbeddingResult append_columns(const LinearCode& c, std::size_t t, InnerKind kind,
                               const Matrix& d);

/// Structured verification verdicts for an embedding result.
struct VerificationReport {
    struct Check {
        std::string name;
        bool pass = false;
        bool skipped = false;
        std::string detail;
    };
    std::vector<Check> checks;
    bool shortest = false;  // s matches the exact formula

    bool ok() const {
        for (const auto& c : checks)
            if (!c.skipped && !c.pass) return false;
        return true;
    }
};

/// Checks the embedding invariants: puncturing the appended coordinates
/// recovers the original generator, the hull dimension equals t by both the
/// rank path and the explicit intersection basis, s >= |t - ell|, and s
/// matches the exact formula. For shortest embeddings additionally checks the
/// rank of the appended block in a hull-first basis: rank(D1) = ell - t when
/// t < ell, and rank(D2) in {t - ell} (or {t - ell, t - ell + 1} for Eea)
/// when t > ell.
VerificationReport verify_embedding(const LinearCode& original, const EmbeddingResult& result);

}  // namespace hullkit
