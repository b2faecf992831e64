#pragma once

#include "revec/fp.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace revec {

enum class Model { weierstrass, edwards };

std::string to_string(Model m);

// y^2 = x^3 + ax + b over F_p, nonsingular. b3 = 3b is kept because the
// reversible circuits treat it as an independent classical constant.
struct WeierstrassParams {
    Prime p;
    Fp a;
    Fp b;
    Fp b3;

    static WeierstrassParams make(const Prime& p, const Fp& a, const Fp& b);
};

// ax^2 + y^2 = 1 + dx^2y^2 over F_p with a, d nonzero and distinct.
struct EdwardsParams {
    Prime p;
    Fp a;
    Fp d;

    static EdwardsParams make(const Prime& p, const Fp& a, const Fp& d);
};

// Affine point; the infinity flag is meaningful for Weierstrass only.
struct AffinePoint {
    Fp x;
    Fp y;
    bool at_infinity = false;

    static AffinePoint infinity(const Prime& p);
    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

// (X : Y : Z) with the curve relation Y^2 Z = X^3 + aXZ^2 + bZ^3.
struct WProjPoint {
    Fp X;
    Fp Y;
    Fp Z;

    static WProjPoint make(const Fp& X, const Fp& Y, const Fp& Z,
                           const WeierstrassParams& params);
    static WProjPoint identity(const Prime& p); // (0 : 1 : 0)
    friend bool operator==(const WProjPoint&, const WProjPoint&) = default;
};

// Extended coordinates (X : Y : T : Z), Z != 0, XY = TZ.
struct EExtPoint {
    Fp X;
    Fp Y;
    Fp T;
    Fp Z;

    static EExtPoint make(const Fp& X, const Fp& Y, const Fp& T, const Fp& Z,
                          const EdwardsParams& params);
    static EExtPoint identity(const Prime& p); // (0 : 1 : 0 : 1)
    friend bool operator==(const EExtPoint&, const EExtPoint&) = default;
};

bool w_on_curve(const WProjPoint& P, const WeierstrassParams& params);
bool w_on_curve(const AffinePoint& P, const WeierstrassParams& params);
bool e_on_curve(const EExtPoint& P, const EdwardsParams& params);
bool e_on_curve(const AffinePoint& P, const EdwardsParams& params);

// Affine embeddings; lambda rescales the representative (lambda != 0).
WProjPoint w_embed(const AffinePoint& P, const WeierstrassParams& params,
                   const Fp& lambda);
WProjPoint w_embed(const AffinePoint& P, const WeierstrassParams& params);
EExtPoint e_embed(const AffinePoint& P, const EdwardsParams& params,
                  const Fp& lambda);
EExtPoint e_embed(const AffinePoint& P, const EdwardsParams& params);

// Complete mixed addition, evaluated exactly as the three output polynomials
// — no representative normalization. 16M + 17A as a formula evaluation.
// Q at infinity is tolerated for oracle use only and returns P unchanged.
WProjPoint w_complete_add(const WProjPoint& P, const AffinePoint& Q,
                          const WeierstrassParams& params);

// Unified mixed addition in extended coordinates, evaluated verbatim as the
// four output polynomials. 8M + 6A as a formula evaluation.
EExtPoint e_mixed_add(const EExtPoint& P, const AffinePoint& Q,
                      const EdwardsParams& params);

// Independent oracle family: chord-and-tangent with explicit divisions.
AffinePoint w_affine_add(const AffinePoint& P, const AffinePoint& Q,
                         const WeierstrassParams& params);
// Independent oracle family: the affine law with explicit denominators
// (x1y2+y1x2)/(1+dx1x2y1y2), (y1y2-ax1x2)/(1-dx1x2y1y2).
AffinePoint e_affine_add(const AffinePoint& P, const AffinePoint& Q,
                         const EdwardsParams& params);

AffinePoint w_negate(const AffinePoint& P, const WeierstrassParams& params);
AffinePoint e_negate(const AffinePoint& P, const EdwardsParams& params);

AffinePoint normalize(const WProjPoint& P);
AffinePoint normalize(const EExtPoint& P);

// Equality as projective classes (cross-multiplication; the Z = 0 class is
// handled separately for Weierstrass).
bool proj_eq(const WProjPoint& P1, const WProjPoint& P2);
bool proj_eq(const EExtPoint& P1, const EExtPoint& P2);

// Double-and-add over the projective mixed additions; k = 0 is the identity.
WProjPoint w_scalar_mul(std::uint64_t k, const AffinePoint& P,
                        const WeierstrassParams& params);
EExtPoint e_scalar_mul(std::uint64_t k, const AffinePoint& P,
                       const EdwardsParams& params);

// Exact order of P by repeated addition (desk scale).
std::uint64_t w_order(const AffinePoint& P, const WeierstrassParams& params);
std::uint64_t e_order(const AffinePoint& P, const EdwardsParams& params);

struct SampledWeierstrass {
    WeierstrassParams params;
    AffinePoint generator;
    std::uint64_t order; // odd by construction, see sampler notes
};

struct SampledEdwards {
    EdwardsParams params;
    AffinePoint generator;
    std::uint64_t order;
};

// Random valid curve plus a point of known exact order. p <= 2^16.
// Weierstrass sampling retries until the subgroup order is odd so the
// complete formulas never hit an exceptional pair on <P>; Edwards sampling
// requires a square and d nonsquare so the unified law is total.
SampledWeierstrass sample_weierstrass(const Prime& p, std::mt19937_64& rng);
SampledEdwards sample_edwards(const Prime& p, std::mt19937_64& rng);

} // namespace revec
