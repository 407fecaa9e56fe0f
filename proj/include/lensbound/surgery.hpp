#pragma once

/**
 * Certificate generators for surgery constructions of homology spheres
 * bounding small 4-manifolds.  Certificates are conditional: the listed
 * hypotheses (sliceness, Lagrangian regularity, ...) are caller-asserted
 * and never verified here; every certificate carries the surgery
 * coefficient, the conclusion that follows, its theorem-vs-conjecture
 * status, and a homology cross-check of the presentation matrix.
 */

#include <string>
#include <utility>
#include <vector>

#include "lensbound/homology.hpp"
#include "lensbound/rational.hpp"

namespace lensbound {

enum class Conclusion { contractible, acyclic, rationally_acyclic, stein_contractible,
                        not_fillable };

enum class CertStatus { theorem, conjecture };

enum class AmbientClass { acyclic, rationally_acyclic };

std::string to_string(Conclusion c);
std::string to_string(CertStatus s);

struct Certificate {
    Slope coefficient;  // reduced surgery coefficient; 1/0 means no surgery
    Conclusion conclusion = Conclusion::contractible;
    std::vector<std::string> hypotheses;
    CertStatus status = CertStatus::theorem;
    std::string paper_ref;  // the result the certificate instantiates
    bool homology_check = false;
    IntMatrix presentation;          // [[0,1],[1,-n]], or 0x0 when trivial
    std::vector<std::string> notes;  // catalog remarks, not serialized

    bool is_trivial() const { return coefficient.is_infinite(); }
};

// 1/m surgery on a knot slice in a contractible 4-manifold bounds a
// contractible 4-manifold.  Requires m != 0.
Certificate slice_surgery_certificate(long long m);

// 1/(s + sign) surgery on a genus-one knot whose surface curve b (with
// F-framing s) is slice in the acyclic (resp. rationally acyclic)
// 4-manifold W.  sign is +1 or -1; s + sign = 0 yields the trivial
// certificate.
Certificate fickle_certificate(long long s, int sign, AmbientClass ambient);

// The two certificates for 1/(m1 + sign) and 1/(m2 + sign) surgery on
// the plumbing of twisted ribbons R_m1(K1) and R_m2(K2).
std::pair<Certificate, Certificate> plumbing_certificate(long long m1, long long m2, int sign,
                                                         AmbientClass slice_class);

// Contact (1 + 1/m) surgery on a regular Lagrangian-slice Legendrian:
// Stein contractible for m > 0, not even fillable for m < 0.  Requires
// m != 0.
Certificate stein_contractible_verdict(long long m);

// 1/(k(s + sign)) surgery: proved for k = 1, conjectural for k >= 2.
// Requires k >= 1.
Certificate fs_conjecture_coefficient(long long k, long long s, int sign);

}  // namespace lensbound
