#include "cosep/field.hpp"

#include "cosep/error.hpp"

#include <string>

namespace cosep {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DomainMismatch: return "DomainMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::CoringMismatch: return "CoringMismatch";
        case ErrorCode::CoalgebraMismatch: return "CoalgebraMismatch";
        case ErrorCode::NotWellDefined: return "NotWellDefined";
        case ErrorCode::NotAMorphism: return "NotAMorphism";
        case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
        case ErrorCode::InvalidBimodule: return "InvalidBimodule";
        case ErrorCode::InvalidCoring: return "InvalidCoring";
        case ErrorCode::InvalidBicomodule: return "InvalidBicomodule";
        case ErrorCode::InvalidComodule: return "InvalidComodule";
        case ErrorCode::InvalidWitness: return "InvalidWitness";
        case ErrorCode::NotACointegration: return "NotACointegration";
        case ErrorCode::NotACoderivation: return "NotACoderivation";
        case ErrorCode::NotCorestrictable: return "NotCorestrictable";
        case ErrorCode::NoFactorization: return "NoFactorization";
        case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are a deterministic witness set for all n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) {
        throw Error(ErrorCode::ParseError, "field modulus " + std::to_string(p) + " is not prime");
    }
    Field f;
    f.kind_ = Kind::Prime;
    f.p_ = p;
    f.pz_ = mpz_class(std::to_string(p));
    return f;
}

Scalar Field::normalize(const Scalar& x) const {
    if (kind_ == Kind::Rationals) return x;
    mpz_class num = x.get_num() % pz_;
    if (num < 0) num += pz_;
    if (x.get_den() == 1) return Scalar(num);
    mpz_class den = x.get_den() % pz_;
    mpz_class inv;
    if (den == 0 || mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz_.get_mpz_t()) == 0) {
        throw Error(ErrorCode::DomainMismatch, "denominator vanishes modulo " + std::to_string(p_));
    }
    mpz_class r = (num * inv) % pz_;
    return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Rationals) return a + b;
    mpz_class r = a.get_num() + b.get_num();
    if (r >= pz_) r -= pz_;
    return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Rationals) return a - b;
    mpz_class r = a.get_num() - b.get_num();
    if (r < 0) r += pz_;
    return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Rationals) return a * b;
    mpz_class r = (a.get_num() * b.get_num()) % pz_;
    return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == Kind::Rationals) return -a;
    if (a == 0) return a;
    return Scalar(mpz_class(pz_ - a.get_num()));
}

Scalar Field::inv(const Scalar& a) const {
    if (a == 0) throw Error(ErrorCode::DomainMismatch, "inverse of zero");
    if (kind_ == Kind::Rationals) return 1 / a;
    mpz_class r;
    mpz_class num = a.get_num();
    mpz_invert(r.get_mpz_t(), num.get_mpz_t(), pz_.get_mpz_t());
    return Scalar(r);
}

Scalar Field::parse(std::string_view text) const {
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') return false;
        }
        return true;
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw Error(ErrorCode::ParseError, "malformed scalar '" + s + "'");
        return normalize(Scalar(mpz_class(strip_plus(s))));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw Error(ErrorCode::ParseError, "malformed scalar '" + s + "'");
    }
    mpz_class d(den);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    Scalar q(mpz_class(strip_plus(num)), d);
    q.canonicalize();
    return normalize(q);
}

std::string Field::format(const Scalar& x) const {
    return x.get_str();
}

std::string Field::describe() const {
    if (kind_ == Kind::Rationals) return "Q";
    return "F_" + std::to_string(p_);
}

}  // namespace cosep
