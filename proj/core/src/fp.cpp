#include "revec/fp.hpp"

#include <ostream>

namespace revec {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

} // namespace

Prime::Prime(std::uint64_t value) : value_(value) {
    if (value <= 3)
        throw domain_error("Prime: modulus must exceed 3, got " + std::to_string(value));
    if (!is_prime_u64(value))
        throw domain_error("Prime: " + std::to_string(value) + " is not prime");
}

Fp::Fp(std::uint64_t v, const Prime& p) : v_(v % p.value()), p_(p.value()) {}

Fp Fp::from_int(std::int64_t v, const Prime& p) {
    const auto m = static_cast<std::int64_t>(p.value());
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return Fp(static_cast<std::uint64_t>(r), p);
}

void Fp::check_same(const Fp& o) const {
    if (p_ != o.p_)
        throw usage_error("Fp: operands have different moduli (" +
                          std::to_string(p_) + " vs " + std::to_string(o.p_) + ")");
}

Fp Fp::operator+(const Fp& o) const {
    check_same(o);
    Fp r = *this;
    r.v_ = v_ + o.v_;
    if (r.v_ >= p_) r.v_ -= p_;
    return r;
}

Fp Fp::operator-(const Fp& o) const {
    check_same(o);
    Fp r = *this;
    r.v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return r;
}

Fp Fp::operator*(const Fp& o) const {
    check_same(o);
    Fp r = *this;
    r.v_ = mulmod(v_, o.v_, p_);
    return r;
}

Fp Fp::operator-() const {
    Fp r = *this;
    r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
}

Fp Fp::inv() const {
    if (v_ == 0) throw domain_error("Fp::inv: zero has no inverse");
    // Extended Euclid on (v, p); p prime so gcd is 1.
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(v_);
    while (newr != 0) {
        const std::int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    Fp out = *this;
    out.v_ = static_cast<std::uint64_t>(t);
    return out;
}

Fp Fp::pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc = base;
    acc.v_ = 1;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Fp& x) {
    return os << x.residue();
}

Fp fe_arith(FeArithKind kind, const Fp& a, const Fp& b) {
    switch (kind) {
    case FeArithKind::add: return a + b;
    case FeArithKind::sub: return a - b;
    case FeArithKind::mul: return a * b;
    case FeArithKind::neg: return -a;
    }
    throw usage_error("fe_arith: unknown kind");
}

Fp fe_inv(const Fp& a) { return a.inv(); }

SpecialUnits special_units(const Prime& p) {
    return SpecialUnits{Fp(2, p).inv(), Fp(3, p).inv()};
}

} // namespace revec
