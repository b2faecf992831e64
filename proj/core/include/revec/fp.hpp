#pragma once

#include "revec/errors.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace revec {

// Odd prime modulus p > 3, validated by trial division at construction.
// Both 2 and 3 must be units so halving and one-third scalings exist.
class Prime {
public:
    explicit Prime(std::uint64_t value);

    std::uint64_t value() const { return value_; }
    friend bool operator==(const Prime&, const Prime&) = default;

private:
    std::uint64_t value_;
};

// Canonical residue in [0, p). Every operation checks that both operands
// share a modulus and returns a canonical result.
class Fp {
public:
    Fp() : v_(0), p_(5) {}
    Fp(std::uint64_t v, const Prime& p);

    // Reduces a possibly negative integer into [0, p).
    static Fp from_int(std::int64_t v, const Prime& p);
    static Fp zero(const Prime& p) { return Fp(0, p); }
    static Fp one(const Prime& p) { return Fp(1, p); }

    std::uint64_t residue() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator-() const;
    Fp inv() const; // extended Euclid; throws domain_error on zero
    Fp pow(std::uint64_t e) const;

    friend bool operator==(const Fp&, const Fp&) = default;

private:
    void check_same(const Fp& o) const;
    std::uint64_t v_;
    std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

enum class FeArithKind { add, sub, mul, neg };

// Dispatch form of the basic field operations; neg ignores b.
Fp fe_arith(FeArithKind kind, const Fp& a, const Fp& b);
Fp fe_inv(const Fp& a);

// The unit constants the reversible circuits scale by.
struct SpecialUnits {
    Fp half;  // 2^-1 mod p
    Fp third; // 3^-1 mod p
};

SpecialUnits special_units(const Prime& p);

} // namespace revec
