#include "revec/curves.hpp"

#include <vector>

namespace revec {

std::string to_string(Model m) {
    return m == Model::weierstrass ? "weierstrass" : "edwards";
}

WeierstrassParams WeierstrassParams::make(const Prime& p, const Fp& a, const Fp& b) {
    const Fp four(4, p), twentyseven(27, p);
    const Fp disc = four * a * a * a + twentyseven * b * b;
    if (disc.is_zero())
        throw domain_error("WeierstrassParams: singular curve (4a^3 + 27b^2 = 0)");
    return WeierstrassParams{p, a, b, Fp(3, p) * b};
}

EdwardsParams EdwardsParams::make(const Prime& p, const Fp& a, const Fp& d) {
    if (a.is_zero() || d.is_zero() || a == d)
        throw domain_error("EdwardsParams: need a != d and a, d nonzero");
    return EdwardsParams{p, a, d};
}

AffinePoint AffinePoint::infinity(const Prime& p) {
    return AffinePoint{Fp::zero(p), Fp::zero(p), true};
}

bool w_on_curve(const WProjPoint& P, const WeierstrassParams& params) {
    if (P.X.is_zero() && P.Y.is_zero() && P.Z.is_zero()) return false;
    const Fp lhs = P.Y * P.Y * P.Z;
    const Fp rhs = P.X * P.X * P.X + params.a * P.X * P.Z * P.Z +
                   params.b * P.Z * P.Z * P.Z;
    return lhs == rhs;
}

bool w_on_curve(const AffinePoint& P, const WeierstrassParams& params) {
    if (P.at_infinity) return true;
    return P.y * P.y == P.x * P.x * P.x + params.a * P.x + params.b;
}

bool e_on_curve(const EExtPoint& P, const EdwardsParams& params) {
    if (P.Z.is_zero()) return false;
    if (!(P.X * P.Y == P.T * P.Z)) return false;
    const Fp Z2 = P.Z * P.Z;
    const Fp lhs = params.a * P.X * P.X * Z2 + P.Y * P.Y * Z2;
    const Fp rhs = Z2 * Z2 + params.d * P.X * P.X * P.Y * P.Y;
    return lhs == rhs;
}

bool e_on_curve(const AffinePoint& P, const EdwardsParams& params) {
    if (P.at_infinity) return false;
    return params.a * P.x * P.x + P.y * P.y ==
           Fp::one(params.p) + params.d * P.x * P.x * P.y * P.y;
}

WProjPoint WProjPoint::make(const Fp& X, const Fp& Y, const Fp& Z,
                            const WeierstrassParams& params) {
    WProjPoint P{X, Y, Z};
    if (!w_on_curve(P, params))
        throw domain_error("WProjPoint: coordinates are not on the curve");
    return P;
}

WProjPoint WProjPoint::identity(const Prime& p) {
    return WProjPoint{Fp::zero(p), Fp::one(p), Fp::zero(p)};
}

EExtPoint EExtPoint::make(const Fp& X, const Fp& Y, const Fp& T, const Fp& Z,
                          const EdwardsParams& params) {
    EExtPoint P{X, Y, T, Z};
    if (!e_on_curve(P, params))
        throw domain_error("EExtPoint: coordinates are not on the curve");
    return P;
}

EExtPoint EExtPoint::identity(const Prime& p) {
    return EExtPoint{Fp::zero(p), Fp::one(p), Fp::zero(p), Fp::one(p)};
}

WProjPoint w_embed(const AffinePoint& P, const WeierstrassParams& params,
                   const Fp& lambda) {
    if (lambda.is_zero()) throw usage_error("w_embed: lambda must be a unit");
    if (P.at_infinity)
        return WProjPoint{Fp::zero(params.p), lambda, Fp::zero(params.p)};
    if (!w_on_curve(P, params))
        throw domain_error("w_embed: affine point is not on the curve");
    return WProjPoint{P.x * lambda, P.y * lambda, lambda};
}

WProjPoint w_embed(const AffinePoint& P, const WeierstrassParams& params) {
    return w_embed(P, params, Fp::one(params.p));
}

EExtPoint e_embed(const AffinePoint& P, const EdwardsParams& params,
                  const Fp& lambda) {
    if (lambda.is_zero()) throw usage_error("e_embed: lambda must be a unit");
    if (P.at_infinity) throw usage_error("e_embed: Edwards points have no infinity");
    if (!e_on_curve(P, params))
        throw domain_error("e_embed: affine point is not on the curve");
    return EExtPoint{P.x * lambda, P.y * lambda, P.x * P.y * lambda, lambda};
}

EExtPoint e_embed(const AffinePoint& P, const EdwardsParams& params) {
    return e_embed(P, params, Fp::one(params.p));
}

WProjPoint w_complete_add(const WProjPoint& P, const AffinePoint& Q,
                          const WeierstrassParams& params) {
    if (!w_on_curve(P, params))
        throw domain_error("w_complete_add: P is not on the curve");
    if (Q.at_infinity) return P; // oracle convenience; circuits use finite Q
    if (!w_on_curve(Q, params))
        throw domain_error("w_complete_add: Q is not on the curve");

    const Fp& a = params.a;
    const Fp& b3 = params.b3;
    const Fp three(3, params.p);

    const Fp m0 = P.X * Q.x;                  // X1*x2
    const Fp m1 = P.Y * Q.y;                  // Y1*y2
    const Fp cross = P.X * Q.y + Q.x * P.Y;   // X1*y2 + x2*Y1
    const Fp w = P.X + Q.x * P.Z;             // X1 + x2*Z1
    const Fp yz = P.Y + Q.y * P.Z;            // Y1 + y2*Z1

    const Fp alpha = m1 - a * w - b3 * P.Z;   // Y1y2 - a(X1 + x2Z1) - 3bZ1
    const Fp beta = m1 + a * w + b3 * P.Z;    // Y1y2 + a(X1 + x2Z1) + 3bZ1
    const Fp gamma = a * m0 + b3 * w - a * a * P.Z;
    const Fp delta = three * m0 + a * P.Z;    // 3X1x2 + aZ1

    return WProjPoint{cross * alpha - yz * gamma,
                      delta * gamma + alpha * beta,
                      yz * beta + cross * delta};
}

EExtPoint e_mixed_add(const EExtPoint& P, const AffinePoint& Q,
                      const EdwardsParams& params) {
    if (!e_on_curve(P, params))
        throw domain_error("e_mixed_add: P is not on the curve");
    if (!e_on_curve(Q, params))
        throw domain_error("e_mixed_add: Q is not on the curve");

    const Fp cross = P.X * Q.y + P.Y * Q.x;   // X1y2 + Y1x2
    const Fp e = P.Y * Q.y - params.a * P.X * Q.x;
    const Fp k = params.d * P.T * Q.x * Q.y;  // dT1x2y2
    const Fp zm = P.Z - k;
    const Fp zp = P.Z + k;

    return EExtPoint{cross * zm, e * zp, e * cross, zm * zp};
}

AffinePoint w_affine_add(const AffinePoint& P, const AffinePoint& Q,
                         const WeierstrassParams& params) {
    if (P.at_infinity) return Q;
    if (Q.at_infinity) return P;
    const Prime p{params.p};
    if (P.x == Q.x) {
        if (!(P.y == Q.y) || P.y.is_zero()) return AffinePoint::infinity(p);
        // tangent: lambda = (3x^2 + a) / 2y
        const Fp lam = (Fp(3, p) * P.x * P.x + params.a) * (Fp(2, p) * P.y).inv();
        const Fp x3 = lam * lam - P.x - Q.x;
        return AffinePoint{x3, lam * (P.x - x3) - P.y, false};
    }
    const Fp lam = (Q.y - P.y) * (Q.x - P.x).inv();
    const Fp x3 = lam * lam - P.x - Q.x;
    return AffinePoint{x3, lam * (P.x - x3) - P.y, false};
}

AffinePoint e_affine_add(const AffinePoint& P, const AffinePoint& Q,
                         const EdwardsParams& params) {
    const Fp prod = params.d * P.x * Q.x * P.y * Q.y;
    const Fp one = Fp::one(params.p);
    const Fp denx = one + prod;
    const Fp deny = one - prod;
    if (denx.is_zero() || deny.is_zero())
        throw domain_error("e_affine_add: vanishing denominator (incomplete pair)");
    return AffinePoint{(P.x * Q.y + P.y * Q.x) * denx.inv(),
                       (P.y * Q.y - params.a * P.x * Q.x) * deny.inv(), false};
}

AffinePoint w_negate(const AffinePoint& P, const WeierstrassParams&) {
    if (P.at_infinity) return P;
    return AffinePoint{P.x, -P.y, false};
}

AffinePoint e_negate(const AffinePoint& P, const EdwardsParams&) {
    return AffinePoint{-P.x, P.y, false};
}

AffinePoint normalize(const WProjPoint& P) {
    if (P.Z.is_zero()) return AffinePoint{P.X, P.Y, true}.at_infinity
                                  ? AffinePoint::infinity(Prime(P.Y.modulus()))
                                  : AffinePoint::infinity(Prime(P.Y.modulus()));
    const Fp zi = P.Z.inv();
    return AffinePoint{P.X * zi, P.Y * zi, false};
}

AffinePoint normalize(const EExtPoint& P) {
    const Fp zi = P.Z.inv(); // Z != 0 is an EExtPoint invariant
    return AffinePoint{P.X * zi, P.Y * zi, false};
}

bool proj_eq(const WProjPoint& P1, const WProjPoint& P2) {
    if (P1.Z.is_zero() || P2.Z.is_zero()) return P1.Z.is_zero() && P2.Z.is_zero();
    return P1.X * P2.Z == P2.X * P1.Z && P1.Y * P2.Z == P2.Y * P1.Z;
}

bool proj_eq(const EExtPoint& P1, const EExtPoint& P2) {
    return P1.X * P2.Z == P2.X * P1.Z && P1.Y * P2.Z == P2.Y * P1.Z &&
           P1.T * P2.Z == P2.T * P1.Z;
}

WProjPoint w_scalar_mul(std::uint64_t k, const AffinePoint& P,
                        const WeierstrassParams& params) {
    WProjPoint acc = WProjPoint::identity(params.p);
    AffinePoint base = P;
    while (k) {
        if (k & 1) acc = w_complete_add(acc, base, params);
        k >>= 1;
        if (k) // double the affine base through the complete formulas
            base = normalize(w_complete_add(w_embed(base, params), base, params));
    }
    return acc;
}

EExtPoint e_scalar_mul(std::uint64_t k, const AffinePoint& P,
                       const EdwardsParams& params) {
    EExtPoint acc = EExtPoint::identity(params.p);
    AffinePoint base = P;
    while (k) {
        if (k & 1) acc = e_mixed_add(acc, base, params);
        k >>= 1;
        if (k)
            base = normalize(e_mixed_add(e_embed(base, params), base, params));
    }
    return acc;
}

std::uint64_t w_order(const AffinePoint& P, const WeierstrassParams& params) {
    if (P.at_infinity) return 1;
    AffinePoint acc = P;
    std::uint64_t n = 1;
    while (!acc.at_infinity) {
        acc = w_affine_add(acc, P, params);
        ++n;
        if (n > params.p.value() + 2 * params.p.value() + 10)
            throw generation_error("w_order: runaway order computation");
    }
    return n;
}

std::uint64_t e_order(const AffinePoint& P, const EdwardsParams& params) {
    const AffinePoint id{Fp::zero(params.p), Fp::one(params.p), false};
    if (P == id) return 1;
    AffinePoint acc = P;
    std::uint64_t n = 1;
    while (!(acc == id)) {
        acc = e_affine_add(acc, P, params);
        ++n;
        if (n > 3 * params.p.value() + 10)
            throw generation_error("e_order: runaway order computation");
    }
    return n;
}

namespace {

// Square-root table for p <= 2^16: sqrt_of[v] = some y with y^2 = v, or -1.
std::vector<std::int64_t> sqrt_table(const Prime& p) {
    std::vector<std::int64_t> table(p.value(), -1);
    for (std::uint64_t y = 0; y < p.value(); ++y) {
        const std::uint64_t v = (y * y) % p.value();
        if (table[v] < 0) table[v] = static_cast<std::int64_t>(y);
    }
    return table;
}

constexpr int kSampleRetries = 4096;

} // namespace

SampledWeierstrass sample_weierstrass(const Prime& p, std::mt19937_64& rng) {
    if (p.value() > (1u << 16))
        throw usage_error("sample_weierstrass: p exceeds the 2^16 desk-scale bound");
    const auto sqrts = sqrt_table(p);
    std::uniform_int_distribution<std::uint64_t> dist(0, p.value() - 1);

    for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
        const Fp a(dist(rng), p), b(dist(rng), p);
        const Fp disc = Fp(4, p) * a * a * a + Fp(27, p) * b * b;
        if (disc.is_zero()) continue;
        const WeierstrassParams params = WeierstrassParams::make(p, a, b);

        const Fp x(dist(rng), p);
        const Fp rhs = x * x * x + a * x + b;
        if (sqrts[rhs.residue()] < 0) continue;
        const AffinePoint P{x, Fp(static_cast<std::uint64_t>(sqrts[rhs.residue()]), p), false};

        const std::uint64_t r = w_order(P, params);
        if (r < 3 || r % 2 == 0) continue; // odd order keeps the formulas complete on <P>
        return SampledWeierstrass{params, P, r};
    }
    throw generation_error("sample_weierstrass: no curve found within retry budget");
}

SampledEdwards sample_edwards(const Prime& p, std::mt19937_64& rng) {
    if (p.value() > (1u << 16))
        throw usage_error("sample_edwards: p exceeds the 2^16 desk-scale bound");
    const auto sqrts = sqrt_table(p);
    std::uniform_int_distribution<std::uint64_t> dist(1, p.value() - 1);

    for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
        const Fp root(dist(rng), p);
        const Fp a = root * root; // square => unified law total with d nonsquare
        const Fp d(dist(rng), p);
        if (d.is_zero() || a == d) continue;
        if (sqrts[d.residue()] >= 0) continue; // d must be a nonsquare
        const EdwardsParams params = EdwardsParams::make(p, a, d);

        const Fp x(dist(rng), p);
        const Fp den = Fp::one(p) - d * x * x;
        if (den.is_zero()) continue;
        const Fp y2 = (Fp::one(p) - a * x * x) * den.inv();
        if (sqrts[y2.residue()] < 0) continue;
        const AffinePoint P{x, Fp(static_cast<std::uint64_t>(sqrts[y2.residue()]), p), false};
        if (!e_on_curve(P, params)) continue;

        std::uint64_t r = 0;
        try {
            r = e_order(P, params);
        } catch (const domain_error&) {
            continue; // a denominator vanished while walking <P>; resample
        }
        if (r < 3) continue;

        // Spot-check the unified law across the subgroup (Z3 must stay a unit).
        bool ok = true;
        AffinePoint S = P;
        for (std::uint64_t i = 1; i < r && ok; ++i) {
            const EExtPoint sum = e_mixed_add(e_embed(S, params), P, params);
            if (sum.Z.is_zero()) ok = false;
            S = e_affine_add(S, P, params);
        }
        if (!ok) continue;
        return SampledEdwards{params, P, r};
    }
    throw generation_error("sample_edwards: no curve found within retry budget");
}

} // namespace revec
