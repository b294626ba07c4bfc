#pragma once

// Deterministic random generators shared by the test suites. std::mt19937 is
// fully specified by the standard, so fixed seeds reproduce across platforms.

#include <random>

#include "hullkit/code.hpp"

namespace hullkit::testgen {

inline std::uint32_t random_enc(const FieldPtr& f, std::mt19937& rng) {
    return std::uniform_int_distribution<std::uint32_t>(0, f->q() - 1)(rng);
}

inline Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols,
                            std::mt19937& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set_enc(i, j, random_enc(f, rng));
    return m;
}

inline Matrix random_full_rank(const FieldPtr& f, std::size_t rows, std::size_t cols,
                               std::mt19937& rng) {
    while (true) {
        Matrix m = random_matrix(f, rows, cols, rng);
        if (rank(m) == std::min(rows, cols)) return m;
    }
}

inline Matrix random_invertible(const FieldPtr& f, std::size_t n, std::mt19937& rng) {
    return random_full_rank(f, n, n, rng);
}

inline LinearCode random_code(const FieldPtr& f, std::size_t n, std::size_t k,
                              std::mt19937& rng) {
    return LinearCode(random_full_rank(f, k, n, rng));
}

inline Matrix random_symmetric(const FieldPtr& f, std::size_t n, std::mt19937& rng) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const std::uint32_t v = random_enc(f, rng);
            m.set_enc(i, j, v);
            m.set_enc(j, i, v);
        }
    return m;
}

// symmetric with zero diagonal (the characteristic-2 alternating case)
inline Matrix random_alternating_char2(const FieldPtr& f, std::size_t n, std::mt19937& rng) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint32_t v = random_enc(f, rng);
            m.set_enc(i, j, v);
            m.set_enc(j, i, v);
        }
    return m;
}

inline Matrix random_hermitian(const FieldPtr& f, std::size_t n, std::mt19937& rng) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        // diagonal entries come from the fixed subfield
        while (true) {
            const std::uint32_t v = random_enc(f, rng);
            if (f->conj_enc(v) == v) {
                m.set_enc(i, i, v);
                break;
            }
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint32_t v = random_enc(f, rng);
            m.set_enc(i, j, v);
            m.set_enc(j, i, f->conj_enc(v));
        }
    }
    return m;
}

}  // namespace hullkit::testgen
