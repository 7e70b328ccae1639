#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cosep {

using Scalar = mpq_class;

/// The base field: exact rationals or a word-size prime field.
///
/// Prime-field elements are stored as integer residues in [0, p) inside an
/// mpq_class, so a single scalar type covers both kinds.
class Field {
public:
    enum class Kind { Rationals, Prime };

    Field() = default;
    static Field rationals() { return Field{}; }
    /// Throws ParseError when p is not prime.
    static Field prime(std::uint64_t p);

    Kind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool is_prime() const noexcept { return kind_ == Kind::Prime; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }

    Scalar normalize(const Scalar& x) const;
    Scalar from_int(long v) const { return normalize(Scalar(v)); }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    /// Accepts "a", "-a", "a/b"; prime fields reduce a*b^{-1} mod p.
    Scalar parse(std::string_view text) const;
    /// "a/b" reduced with b > 0 ("a" when b = 1); residues in [0, p) for prime fields.
    std::string format(const Scalar& x) const;

    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }

private:
    Kind kind_ = Kind::Rationals;
    std::uint64_t p_ = 0;
    mpz_class pz_;
};

/// Deterministic primality test for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

}  // namespace cosep
