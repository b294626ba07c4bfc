#pragma once

// Independent brute-force oracles. These deliberately avoid the library code
// paths they check: hull dimension by full codeword enumeration, rank by row
// subset enumeration, and the exhaustive shorter-embedding search.

#include <optional>

#include "hullkit/code.hpp"

namespace hullkit::testoracle {

// Enumerates all q^k codewords and counts those orthogonal to every row of G;
// the count is q^t, and t is returned. Requires q^k to be small.
inline std::size_t hull_dimension_by_enumeration(const LinearCode& c, InnerKind kind) {
    const FieldSpec& f = *c.field();
    const Matrix gstar = star(c.generator(), kind);  // n x k
    const std::size_t k = c.k(), n = c.n();
    std::uint64_t in_hull = 0;
    std::vector<std::uint32_t> msg(k, 0);
    while (true) {
        // codeword = msg * G
        std::vector<std::uint32_t> word(n, 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (msg[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                word[j] = f.add_enc(word[j], f.mul_enc(msg[i], c.generator().enc_at(i, j)));
        }
        bool orthogonal = true;
        for (std::size_t col = 0; col < k && orthogonal; ++col) {
            std::uint32_t acc = 0;
            for (std::size_t j = 0; j < n; ++j)
                acc = f.add_enc(acc, f.mul_enc(word[j], gstar.enc_at(j, col)));
            orthogonal = acc == 0;
        }
        if (orthogonal) ++in_hull;
        // odometer
        std::size_t pos = 0;
        while (pos < k && ++msg[pos] == f.q()) msg[pos++] = 0;
        if (pos == k) break;
    }
    std::size_t t = 0;
    std::uint64_t power = 1;
    while (power < in_hull) {
        power *= f.q();
        ++t;
    }
    if (power != in_hull) throw Error("hull enumeration count is not a power of q");
    return t;
}

// Largest size of a linearly independent row subset, with independence tested
// by enumerating all coefficient vectors over the subset.
inline std::size_t rank_by_row_subsets(const Matrix& m) {
    const FieldSpec& f = *m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << rows); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < rows; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        if (idx.size() <= best) continue;
        // independent iff no nonzero combination vanishes
        std::vector<std::uint32_t> coef(idx.size(), 0);
        bool independent = true;
        while (independent) {
            std::size_t pos = 0;
            while (pos < coef.size() && ++coef[pos] == f.q()) coef[pos++] = 0;
            if (pos == coef.size()) break;  // wrapped: all combinations done
            std::vector<std::uint32_t> sum(cols, 0);
            for (std::size_t a = 0; a < idx.size(); ++a) {
                if (coef[a] == 0) continue;
                for (std::size_t j = 0; j < cols; ++j)
                    sum[j] = f.add_enc(sum[j], f.mul_enc(coef[a], m.enc_at(idx[a], j)));
            }
            bool zero = true;
            for (std::uint32_t v : sum) zero = zero && v == 0;
            if (zero) independent = false;
        }
        if (independent) best = idx.size();
    }
    return best;
}

// Does ANY k x width append block D achieve rank(gram(G) + D D*) = k - t?
// Exhausts all q^(k*width) candidates. Returns the first D found.
inline std::optional<Matrix> find_embedding_of_width(const LinearCode& c, std::size_t t,
                                                     InnerKind kind, std::size_t width) {
    const FieldSpec& f = *c.field();
    const std::size_t k = c.k();
    const Matrix base = gram(c.generator(), kind);
    Matrix d(c.field(), k, width);
    const std::size_t cells = k * width;
    while (true) {
        if (rank(base + gram(d, kind)) == k - t) return d;
        // odometer over the cells of D
        std::size_t pos = 0;
        while (pos < cells) {
            const std::size_t r = pos / width, cc = pos % width;
            const std::uint32_t v = d.enc_at(r, cc) + 1;
            if (v == f.q()) {
                d.set_enc(r, cc, 0);
                ++pos;
            } else {
                d.set_enc(r, cc, v);
                break;
            }
        }
        if (pos == cells) return std::nullopt;
    }
}

}  // namespace hullkit::testoracle
