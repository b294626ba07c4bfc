#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hullkit/errors.hpp"

namespace hullkit {

class FieldSpec;
class FieldElement;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Exact arithmetic in GF(p^m), elements represented in the polynomial basis
/// modulo an explicit monic irreducible polynomial over GF(p).
///
/// The integer encoding of an element with coordinates (c0, ..., c_{m-1}) is
/// sum(c_i * p^i); all element scans and tie-breaks in this library run in
/// increasing encoding order, which makes every "find an element such that"
/// step reproducible.
///
/// Field orders are capped at 2^16. Multiplication, inversion and powers go
/// through discrete-log tables built once at construction; the generator used
/// for the tables is the primitive element with the smallest encoding.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    /// Build GF(p^m) with the default modulus (built-in table for GF(4) and
    /// GF(9), otherwise the first irreducible monic polynomial in encoding
    /// order). Throws InvalidFieldSpec for bad parameters.
    static FieldPtr make(std::uint32_t p, std::uint32_t m = 1);

    /// Build GF(p^m) with an explicit modulus (coefficients low to high,
    /// length m+1, monic). The modulus is checked for irreducibility.
    static FieldPtr make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    /// The default modulus make(p, m) would use.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool has_conjugation() const { return m_ % 2 == 0; }
    /// sqrt(q) = p^{m/2}; only meaningful when has_conjugation().
    std::uint32_t sqrt_q() const;

    /// Structural equality: same p, m, and modulus. Elements of two
    /// structurally equal FieldSpec instances interoperate.
    bool same_field(const FieldSpec& other) const;

    FieldElement element(std::uint32_t enc) const;
    FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// Primitive element with the smallest encoding (cached).
    FieldElement primitive_element() const;

    /// Smallest-encoding nonsquare of an odd-order field.
    FieldElement canonical_nonsquare() const;

    /// An element a with a^(sqrt(q)+1) = -1: for odd p this is g^((sqrt(q)-1)/2)
    /// for the cached primitive element g; for p = 2 it is 1.
    FieldElement neg_norm_one_element() const;

    // Raw encoding arithmetic. These skip the cross-field checks and are the
    // hot path used by Matrix; FieldElement operators wrap them.
    std::uint32_t add_enc(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_enc(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_enc(std::uint32_t a) const;
    std::uint32_t mul_enc(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_enc(std::uint32_t a) const;
    std::uint32_t div_enc(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_enc(std::uint32_t a, std::int64_t e) const;
    std::uint32_t conj_enc(std::uint32_t a) const;
    std::uint32_t sqrt_enc(std::uint32_t a) const;

    std::vector<std::uint32_t> coeffs_of(std::uint32_t enc) const;

private:
    FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i in [0, q-2]
    std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
    std::uint32_t nonsquare_ = 0;     // smallest-encoding nonsquare (odd q only)
};

/// One element of a FieldSpec. Immutable value type; the representation is
/// always canonical, so equality is encoding equality.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::uint32_t enc) : field_(std::move(field)), enc_(enc) {}

    const FieldPtr& field() const { return field_; }
    std::uint32_t enc() const { return enc_; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs_of(enc_); }
    bool is_zero() const { return enc_ == 0; }

    FieldElement inverse() const { return {field_, field_->inv_enc(enc_)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.enc_ == b.enc_ && a.field_->same_field(*b.field_);
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    FieldPtr field_;
    std::uint32_t enc_ = 0;
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);

FieldElement pow(const FieldElement& a, std::int64_t e);

/// Conjugation x -> x^sqrt(q) of a field with even extension degree.
FieldElement conj(const FieldElement& a);

/// True iff the nonzero element a of an odd-order field is a square,
/// i.e. a^((q-1)/2) = 1.
bool is_square(const FieldElement& a);

/// A square root; of the two roots in odd characteristic, the one with the
/// smaller encoding. In characteristic 2 squaring is a bijection, so every
/// element has exactly one root.
FieldElement sqrt(const FieldElement& a);

/// (z1, z2) with z1^2 + z2^2 = z for nonzero z over an odd-order field,
/// scanning z1 in encoding order.
std::pair<FieldElement, FieldElement> sum_of_two_squares(const FieldElement& z);

/// c with c * conj(c) = d, for nonzero d fixed by conjugation; smallest
/// encoding first.
FieldElement norm_solve(const FieldElement& d);

}  // namespace hullkit
