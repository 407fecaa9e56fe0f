#pragma once

/**
 * Exact rational and modular arithmetic for lens-space computations.
 *
 * Everything here is a small value type with componentwise equality:
 *  - Slope: a reduced extended rational num/den (den >= 0), the single
 *    infinite slope being 1/0.  Vertices of the Farey tessellation.
 *  - LensSpace: a normalized coprime pair (p, q) with 0 <= q < p.
 *  - NegCF: a negative continued fraction, every coefficient <= -2.
 *  - ConnectedSum: a multiset of lens spaces (S^3 summands dropped).
 *
 * All operations are pure and throw std::invalid_argument on bad input.
 */

#include <string>
#include <utility>
#include <vector>

namespace lensbound {

// Reduced extended rational num/den with den >= 0; 1/0 is the point at
// infinity.  Equality is componentwise on the reduced form.
struct Slope {
    long long num = 0;
    long long den = 1;

    Slope() = default;
    Slope(long long n, long long d);  // reduces; throws on 0/0

    static Slope infinity() { return Slope(1, 0); }
    static Slope zero() { return Slope(0, 1); }

    bool is_infinite() const { return den == 0; }
    bool is_integer() const { return den == 1; }

    std::string str() const;  // "num/den", or "inf"

    friend bool operator==(const Slope&, const Slope&) = default;
};

// Parses "num/den", a bare integer, or "inf".
Slope parse_slope(const std::string& token);

// Strict value order with infinity greatest; both finite comparisons are
// exact (no overflow for |num|, den < 2^62).
bool slope_value_less(const Slope& a, const Slope& b);

// L(p, q) stored as the normalized representative: p >= 1, 0 <= q < p,
// gcd(p, q) = 1, and q = 0 only for p = 1 (S^3).
struct LensSpace {
    long long p = 1;
    long long q = 0;

    std::string str() const;    // "L(p,q)"
    std::string token() const;  // "p,q"

    friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

// Negative continued fraction a1 - 1/(a2 - 1/(... - 1/an)), all ai <= -2.
struct NegCF {
    std::vector<long long> coeffs;

    friend bool operator==(const NegCF&, const NegCF&) = default;
};

// Formal connected sum of lens spaces.  Summands are kept sorted by
// (p, q); L(1,0) summands are dropped on construction.  The empty sum
// is S^3.
struct ConnectedSum {
    std::vector<LensSpace> summands;

    std::string token() const;  // "p1,q1#p2,q2#..."; "" for S^3

    friend bool operator==(const ConnectedSum&, const ConnectedSum&) = default;
};

// x^-1 mod m for gcd(x, m) = 1, m >= 1; result in [0, m).
long long mod_inverse(long long x, long long m);

// The unique expansion of -p/q with all coefficients <= -2.
// Requires gcd(p, q) = 1 and 0 < q < p.
NegCF neg_cf(long long p, long long q);

// Inverse of neg_cf: evaluates the fraction and returns (p, q) with
// the value equal to -p/q, p >= 2, 0 < q < p.
std::pair<long long, long long> cf_eval(const NegCF& cf);

// Normalizes (p, q) to the stored representative; rejects non-coprime
// input and p < 1.
LensSpace lens_normalize(long long p, long long q);

// Orientation reversal: L(p, q) -> L(p, p - q).  Involutive.
LensSpace lens_reverse(const LensSpace& lens);

// Oriented homeomorphism: p1 = p2 and q2 = q1 or q1^-1 (mod p).
bool lens_oriented_homeo(const LensSpace& a, const LensSpace& b);

// Canonical representative of the oriented homeomorphism class:
// min(q, q^-1 mod p).
long long oriented_class_rep(const LensSpace& lens);

// Builds a sum from arbitrary summands (sorts, drops S^3 factors).
ConnectedSum make_connected_sum(std::vector<LensSpace> summands);

// Parses the "p,q" token format.
LensSpace parse_lens(const std::string& token);

// Parses "#"-joined lens tokens; "" parses to the empty sum.
ConnectedSum parse_connected_sum(const std::string& token);

}  // namespace lensbound
