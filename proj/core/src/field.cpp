#include "hullkit/field.hpp"

#include <algorithm>
#include <numeric>

namespace hullkit {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// remainder of a mod b over GF(p); both coefficient vectors low to high
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    for (std::size_t d = a.size(); d-- > db;) {
        const std::uint32_t c = a[d];
        if (c == 0) continue;
        // b is monic: subtract c * x^{d-db} * b
        for (std::size_t i = 0; i <= db; ++i) {
            std::uint32_t& x = a[d - db + i];
            x = static_cast<std::uint32_t>((x + std::uint64_t(p) * p - std::uint64_t(c) * b[i]) % p);
        }
    }
    a.resize(db);
    return a;
}

bool poly_irreducible(const std::vector<std::uint32_t>& mod, std::uint32_t p) {
    const std::size_t m = mod.size() - 1;
    if (m == 1) return true;
    // exhaustive trial division by all monic polynomials of degree 1..m/2
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t e = 0; e < count; ++e) {
            std::vector<std::uint32_t> div(d + 1);
            std::uint64_t x = e;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<std::uint32_t>(x % p);
                x /= p;
            }
            div[d] = 1;
            auto r = poly_rem(mod, div, p);
            if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; }))
                return false;
        }
    }
    return true;
}

}  // namespace

FieldPtr FieldSpec::make(std::uint32_t p, std::uint32_t m) {
    return make(p, m, default_modulus(p, m));
}

FieldPtr FieldSpec::make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) {
    return FieldPtr(new FieldSpec(p, m, std::move(modulus)));
}

std::vector<std::uint32_t> FieldSpec::default_modulus(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw InvalidFieldSpec("characteristic must be prime");
    if (m < 1) throw InvalidFieldSpec("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw InvalidFieldSpec("field order exceeds 2^16");
    }
    if (m == 1) return {0, 1};
    if (p == 2 && m == 2) return {1, 1, 1};  // z^2 = z + 1
    if (p == 3 && m == 2) return {2, 2, 1};  // w^2 = w + 1
    // first irreducible monic polynomial of degree m in encoding order
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t e = 0; e < count; ++e) {
        std::vector<std::uint32_t> cand(m + 1);
        std::uint64_t x = e;
        for (std::uint32_t i = 0; i < m; ++i) {
            cand[i] = static_cast<std::uint32_t>(x % p);
            x /= p;
        }
        cand[m] = 1;
        if (poly_irreducible(cand, p)) return cand;
    }
    throw InvalidFieldSpec("no irreducible polynomial found");  // unreachable
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw InvalidFieldSpec("characteristic must be prime");
    if (m_ < 1) throw InvalidFieldSpec("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        q *= p_;
        if (q > kMaxOrder) throw InvalidFieldSpec("field order exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (modulus_.size() != m_ + 1) throw InvalidFieldSpec("modulus must have degree m");
    if (modulus_.back() != 1) throw InvalidFieldSpec("modulus must be monic");
    for (std::uint32_t c : modulus_)
        if (c >= p_) throw InvalidFieldSpec("modulus coefficients must lie in [0, p)");
    if (!poly_irreducible(modulus_, p_))
        throw InvalidFieldSpec("modulus is reducible over GF(p)");
    build_tables();
}

std::uint32_t FieldSpec::mul_poly(std::uint32_t a, std::uint32_t b) const {
    if (m_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    auto ca = coeffs_of(a), cb = coeffs_of(b);
    std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (ca[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
    // x^m = -(modulus_[0] + ... + modulus_[m-1] x^{m-1})
    for (std::size_t d = prod.size(); d-- > m_;) {
        const std::uint32_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < m_; ++i)
            prod[d - m_ + i] = (prod[d - m_ + i] + (p_ - modulus_[i] % p_) * c) % p_;
    }
    std::uint32_t enc = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        enc += prod[i] * pw;
        pw *= p_;
    }
    return enc;
}

void FieldSpec::build_tables() {
    const std::uint32_t order = q_ - 1;
    const auto factors = prime_factors(order);
    std::uint32_t g = 0;
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
        bool primitive = true;
        for (std::uint32_t r : factors) {
            // cand^(order/r) by repeated squaring over the polynomial basis
            std::uint64_t e = order / r;
            std::uint32_t base = cand, acc = 1;
            while (e) {
                if (e & 1) acc = mul_poly(acc, base);
                base = mul_poly(base, base);
                e >>= 1;
            }
            if (acc == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = cand;
            break;
        }
    }
    exp_.assign(order, 0);
    log_.assign(q_, 0);
    std::uint32_t acc = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = acc;
        log_[acc] = i;
        acc = mul_poly(acc, g);
    }
    if (p_ % 2 == 1) {
        for (std::uint32_t e = 2; e < q_; ++e) {
            if (log_[e] % 2 == 1) {
                nonsquare_ = e;
                break;
            }
        }
    }
}

std::uint32_t FieldSpec::sqrt_q() const {
    if (!has_conjugation()) throw NotAHermitianField();
    std::uint32_t r = 1;
    for (std::uint32_t i = 0; i < m_ / 2; ++i) r *= p_;
    return r;
}

bool FieldSpec::same_field(const FieldSpec& other) const {
    return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

FieldElement FieldSpec::element(std::uint32_t enc) const {
    if (enc >= q_) throw InvalidFieldSpec("encoding out of range");
    return {shared_from_this(), enc};
}

FieldElement FieldSpec::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != m_) throw InvalidFieldSpec("coefficient count must equal m");
    std::uint32_t enc = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (coeffs[i] >= p_) throw InvalidFieldSpec("coefficient out of range");
        enc += coeffs[i] * pw;
        pw *= p_;
    }
    return {shared_from_this(), enc};
}

FieldElement FieldSpec::zero() const { return {shared_from_this(), 0}; }
FieldElement FieldSpec::one() const { return {shared_from_this(), 1}; }

FieldElement FieldSpec::primitive_element() const { return {shared_from_this(), exp_[q_ == 2 ? 0 : 1]}; }

FieldElement FieldSpec::canonical_nonsquare() const {
    if (p_ == 2) throw EvenCharacteristic();
    return {shared_from_this(), nonsquare_};
}

FieldElement FieldSpec::neg_norm_one_element() const {
    if (!has_conjugation()) throw NotAHermitianField();
    if (p_ == 2) return one();
    const std::uint32_t half = (sqrt_q() - 1) / 2;
    return {shared_from_this(), exp_[half % (q_ - 1)]};
}

std::vector<std::uint32_t> FieldSpec::coeffs_of(std::uint32_t enc) const {
    std::vector<std::uint32_t> c(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        c[i] = enc % p_;
        enc /= p_;
    }
    return c;
}

std::uint32_t FieldSpec::add_enc(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return (a + b) % p_;
    std::uint32_t enc = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        enc += ((a % p_ + b % p_) % p_) * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return enc;
}

std::uint32_t FieldSpec::neg_enc(std::uint32_t a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return (p_ - a) % p_;
    std::uint32_t enc = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        enc += ((p_ - a % p_) % p_) * pw;
        a /= p_;
        pw *= p_;
    }
    return enc;
}

std::uint32_t FieldSpec::sub_enc(std::uint32_t a, std::uint32_t b) const {
    return add_enc(a, neg_enc(b));
}

std::uint32_t FieldSpec::mul_enc(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t FieldSpec::inv_enc(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero();
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FieldSpec::div_enc(std::uint32_t a, std::uint32_t b) const {
    return mul_enc(a, inv_enc(b));
}

std::uint32_t FieldSpec::pow_enc(std::uint32_t a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) throw DivisionByZero();
        return e == 0 ? 1 : 0;
    }
    const std::int64_t order = q_ - 1;
    std::int64_t r = e % order;
    if (r < 0) r += order;
    return exp_[static_cast<std::uint32_t>((std::uint64_t(log_[a]) * r) % order)];
}

std::uint32_t FieldSpec::conj_enc(std::uint32_t a) const {
    if (!has_conjugation()) throw NotAHermitianField();
    if (a == 0) return 0;
    return exp_[static_cast<std::uint32_t>((std::uint64_t(log_[a]) * sqrt_q()) % (q_ - 1))];
}

std::uint32_t FieldSpec::sqrt_enc(std::uint32_t a) const {
    if (a == 0) return 0;
    if (p_ == 2) return pow_enc(a, q_ / 2);  // squaring is a bijection in char 2
    if (log_[a] % 2 != 0) throw NotASquare();
    const std::uint32_t r = exp_[log_[a] / 2];
    return std::min(r, neg_enc(r));
}

namespace {

const FieldPtr& checked_same(const FieldElement& a, const FieldElement& b) {
    if (!a.field()->same_field(*b.field())) throw FieldMismatch();
    return a.field();
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const auto& f = checked_same(a, b);
    return {f, f->add_enc(a.enc(), b.enc())};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const auto& f = checked_same(a, b);
    return {f, f->sub_enc(a.enc(), b.enc())};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const auto& f = checked_same(a, b);
    return {f, f->mul_enc(a.enc(), b.enc())};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    const auto& f = checked_same(a, b);
    return {f, f->div_enc(a.enc(), b.enc())};
}

FieldElement operator-(const FieldElement& a) {
    return {a.field(), a.field()->neg_enc(a.enc())};
}

FieldElement pow(const FieldElement& a, std::int64_t e) {
    return {a.field(), a.field()->pow_enc(a.enc(), e)};
}

FieldElement conj(const FieldElement& a) {
    return {a.field(), a.field()->conj_enc(a.enc())};
}

bool is_square(const FieldElement& a) {
    const auto& f = a.field();
    if (f->p() == 2) throw EvenCharacteristic();
    if (a.is_zero()) throw ZeroArgument();
    return f->pow_enc(a.enc(), (f->q() - 1) / 2) == 1;
}

FieldElement sqrt(const FieldElement& a) {
    return {a.field(), a.field()->sqrt_enc(a.enc())};
}

std::pair<FieldElement, FieldElement> sum_of_two_squares(const FieldElement& z) {
    const auto& f = z.field();
    if (f->p() == 2) throw EvenCharacteristic();
    if (z.is_zero()) throw ZeroArgument();
    for (std::uint32_t e1 = 0; e1 < f->q(); ++e1) {
        const std::uint32_t rem = f->sub_enc(z.enc(), f->mul_enc(e1, e1));
        if (rem == 0) return {FieldElement(f, e1), f->zero()};
        if (is_square(FieldElement(f, rem)))
            return {FieldElement(f, e1), sqrt(FieldElement(f, rem))};
    }
    throw Error("no two-square decomposition found");  // unreachable for odd q
}

FieldElement norm_solve(const FieldElement& d) {
    const auto& f = d.field();
    if (!f->has_conjugation()) throw NotAHermitianField();
    if (d.is_zero()) throw ZeroArgument();
    if (f->conj_enc(d.enc()) != d.enc()) throw NotInFixedSubfield();
    for (std::uint32_t c = 1; c < f->q(); ++c)
        if (f->mul_enc(c, f->conj_enc(c)) == d.enc()) return {f, c};
    throw Error("norm equation has no solution");  // unreachable: the norm is onto
}

}  // namespace hullkit
