#include "lensbound/surgery.hpp"

#include <stdexcept>

namespace lensbound {

namespace {

constexpr const char* kSliceRef = "1/m surgery on a slice knot (slice-disk complement + handle)";
constexpr const char* kFickleRef = "Fickle-type genus-one ribbon surgery theorem";
constexpr const char* kPlumbingRef = "twisted-ribbon plumbing example of the genus-one theorem";
constexpr const char* kSteinRef = "Lagrangian-slice contact surgery criterion";
constexpr const char* kFsRef = "Fintushel-Stern 1/k(s+/-1) surgery conjecture";

void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

// Relative presentation of 1/n surgery: 0-framed knot plus an (-n)-framed
// meridian.  Unimodular for every n.
IntMatrix inverse_coefficient_presentation(long long n) {
    IntMatrix m(2);
    m.at(0, 0) = 0;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = -n;
    return m;
}

// Fills coefficient 1/n, presentation and homology check; n = 0 gives the
// trivial certificate (no surgery, boundary bounds the ambient manifold).
void set_coefficient(Certificate& cert, long long n) {
    if (n == 0) {
        cert.coefficient = Slope::infinity();
        cert.presentation = IntMatrix(0);
        cert.homology_check = is_homology_sphere(cert.presentation);
        cert.notes.push_back("degenerate coefficient: no surgery performed, the boundary "
                             "bounds the ambient manifold itself");
        return;
    }
    cert.coefficient = Slope(1, n);  // normalizes -1/|n| for n < 0
    cert.presentation = inverse_coefficient_presentation(n);
    cert.homology_check = is_homology_sphere(cert.presentation);
}

std::string ambient_name(AmbientClass a) {
    return a == AmbientClass::acyclic ? "acyclic" : "rationally acyclic";
}

}  // namespace

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::contractible: return "contractible";
        case Conclusion::acyclic: return "acyclic";
        case Conclusion::rationally_acyclic: return "rationally_acyclic";
        case Conclusion::stein_contractible: return "stein_contractible";
        case Conclusion::not_fillable: return "not_fillable";
    }
    return "?";
}

std::string to_string(CertStatus s) {
    return s == CertStatus::theorem ? "theorem" : "conjecture";
}

Certificate slice_surgery_certificate(long long m) {
    if (m == 0)
        throw std::invalid_argument("0-surgery is not 1/m surgery for any integer m");
    Certificate cert;
    cert.conclusion = Conclusion::contractible;
    cert.status = CertStatus::theorem;
    cert.paper_ref = kSliceRef;
    cert.hypotheses = {"K slice in a contractible 4-manifold W"};
    set_coefficient(cert, m);
    if (m == 1) {
        cert.notes.push_back("examples: 1-surgery on the stevedore knot 6_1 gives "
                             "Sigma(2,3,13); 1-surgery on the pretzel P(-3,3,-3) gives the "
                             "Mazur cork boundary");
    }
    return cert;
}

Certificate fickle_certificate(long long s, int sign, AmbientClass ambient) {
    check_sign(sign);
    Certificate cert;
    cert.conclusion = ambient == AmbientClass::acyclic ? Conclusion::acyclic
                                                       : Conclusion::rationally_acyclic;
    cert.status = CertStatus::theorem;
    cert.paper_ref = kFickleRef;
    cert.hypotheses = {"K has a genus-one Seifert surface F",
                       "[b] is primitive in H_1(F)",
                       "b is slice in W",
                       "b has F-framing s = " + std::to_string(s),
                       "W is " + ambient_name(ambient)};
    set_coefficient(cert, s + sign);
    if (s + sign == -2)
        cert.notes.push_back("e.g. framing -1 on a surface curve of the right-handed trefoil: "
                             "-1/2 surgery, the Sigma(2,3,25) application");
    return cert;
}

std::pair<Certificate, Certificate> plumbing_certificate(long long m1, long long m2, int sign,
                                                         AmbientClass slice_class) {
    check_sign(sign);
    std::pair<Certificate, Certificate> certs;
    Certificate* parts[2] = {&certs.first, &certs.second};
    long long twists[2] = {m1, m2};
    for (int i = 0; i < 2; ++i) {
        Certificate& cert = *parts[i];
        cert.conclusion = slice_class == AmbientClass::acyclic ? Conclusion::acyclic
                                                               : Conclusion::rationally_acyclic;
        cert.status = CertStatus::theorem;
        cert.paper_ref = kPlumbingRef;
        std::string slice_kind = slice_class == AmbientClass::acyclic
                                     ? "slice in acyclic 4-manifolds"
                                     : "rationally slice";
        cert.hypotheses = {"K1 and K2 are " + slice_kind,
                           "surgery knot is the plumbing of R_" + std::to_string(m1) +
                               "(K1) and R_" + std::to_string(m2) + "(K2)"};
        set_coefficient(cert, twists[i] + sign);
    }
    return certs;
}

Certificate stein_contractible_verdict(long long m) {
    if (m == 0)
        throw std::invalid_argument("contact coefficient 1 + 1/m is undefined for m = 0");
    Certificate cert;
    cert.status = CertStatus::theorem;
    cert.paper_ref = kSteinRef;
    cert.hypotheses = {"L bounds a regular Lagrangian disk in (B^4, omega_std)"};
    set_coefficient(cert, m);
    cert.notes.push_back("contact (1 + 1/" + std::to_string(m) + ")-surgery, smooth coefficient 1/" +
                         std::to_string(m));
    if (m > 0) {
        cert.conclusion = Conclusion::stein_contractible;
        if (m == 1)
            cert.notes.push_back("m = 1: the blow-down normal form supplies the Stein handle "
                                 "presentation");
    } else {
        cert.conclusion = Conclusion::not_fillable;
        cert.notes.push_back("contact r-surgery with r = 1 + 1/m < 1 on a Lagrangian-slice "
                             "knot admits no strong symplectic filling, much less a "
                             "contractible Stein one");
    }
    return cert;
}

Certificate fs_conjecture_coefficient(long long k, long long s, int sign) {
    if (k < 1) throw std::invalid_argument("fs_conjecture_coefficient requires k >= 1");
    check_sign(sign);
    Certificate cert;
    cert.conclusion = Conclusion::acyclic;
    cert.paper_ref = kFsRef;
    cert.hypotheses = {"K has a genus-one Seifert surface F",
                       "[b] is primitive in H_1(F)",
                       "b is slice in W",
                       "b has F-framing s = " + std::to_string(s),
                       "W is acyclic"};
    set_coefficient(cert, k * (s + sign));
    cert.status = (cert.is_trivial() || k == 1) ? CertStatus::theorem : CertStatus::conjecture;
    if (k >= 2 && !cert.is_trivial()) {
        cert.notes.push_back("conjectural for k >= 2; if it holds, Sigma(2,3,12k+1) bounds an "
                             "acyclic 4-manifold via -1/(2k) surgery on the right-handed "
                             "trefoil");
    }
    return cert;
}

}  // namespace lensbound
