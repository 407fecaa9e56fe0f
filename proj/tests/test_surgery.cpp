#include <doctest.h>

#include <stdexcept>

#include <string>

#include "lensbound/surgery.hpp"

using namespace lensbound;

namespace {

bool notes_contain(const Certificate& c, const std::string& needle) {
    for (const std::string& n : c.notes)
        if (n.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_SUITE("surgery") {

TEST_CASE("slice surgery certificates") {
    Certificate one = slice_surgery_certificate(1);
    CHECK(one.coefficient == Slope(1, 1));
    CHECK(one.conclusion == Conclusion::contractible);
    CHECK(one.status == CertStatus::theorem);
    CHECK(one.homology_check);
    CHECK(notes_contain(one, "Sigma(2,3,13)"));

    Certificate neg = slice_surgery_certificate(-2);
    CHECK(neg.coefficient == Slope(-1, 2));
    CHECK(neg.conclusion == Conclusion::contractible);

    for (long long m = -50; m <= 50; ++m) {
        if (m == 0) continue;
        CHECK(slice_surgery_certificate(m).homology_check);
    }
    CHECK_THROWS_AS(slice_surgery_certificate(0), std::invalid_argument);
}

TEST_CASE("fickle certificates") {
    Certificate acyclic = fickle_certificate(-1, -1, AmbientClass::acyclic);
    CHECK(acyclic.coefficient == Slope(-1, 2));
    CHECK(acyclic.conclusion == Conclusion::acyclic);
    CHECK(acyclic.status == CertStatus::theorem);
    CHECK(notes_contain(acyclic, "Sigma(2,3,25)"));

    Certificate trivial = fickle_certificate(1, -1, AmbientClass::acyclic);
    CHECK(trivial.is_trivial());
    CHECK(trivial.coefficient == Slope::infinity());
    CHECK(trivial.homology_check);  // empty presentation: boundary bounds W itself

    Certificate rational = fickle_certificate(0, 1, AmbientClass::rationally_acyclic);
    CHECK(rational.coefficient == Slope(1, 1));
    CHECK(rational.conclusion == Conclusion::rationally_acyclic);

    CHECK_THROWS_AS(fickle_certificate(0, 2, AmbientClass::acyclic), std::invalid_argument);
}

TEST_CASE("plumbing certificates") {
    auto [a, b] = plumbing_certificate(0, 0, 1, AmbientClass::rationally_acyclic);
    CHECK(a.coefficient == Slope(1, 1));
    CHECK(b.coefficient == Slope(1, 1));
    CHECK(a.conclusion == Conclusion::rationally_acyclic);

    auto [c, d] = plumbing_certificate(-2, 3, -1, AmbientClass::acyclic);
    CHECK(c.coefficient == Slope(-1, 3));
    CHECK(d.coefficient == Slope(1, 2));
    CHECK(c.conclusion == Conclusion::acyclic);

    auto [e, f] = plumbing_certificate(1, 1, -1, AmbientClass::rationally_acyclic);
    CHECK(e.is_trivial());
    CHECK(f.is_trivial());
}

TEST_CASE("stein verdicts flip at m = 0") {
    CHECK(stein_contractible_verdict(2).conclusion == Conclusion::stein_contractible);
    CHECK(stein_contractible_verdict(1).conclusion == Conclusion::stein_contractible);
    CHECK(notes_contain(stein_contractible_verdict(1), "blow-down normal form"));
    CHECK(stein_contractible_verdict(-1).conclusion == Conclusion::not_fillable);
    CHECK(stein_contractible_verdict(-7).conclusion == Conclusion::not_fillable);
    for (long long m = 1; m <= 25; ++m) {
        CHECK(stein_contractible_verdict(m).conclusion == Conclusion::stein_contractible);
        CHECK(stein_contractible_verdict(-m).conclusion == Conclusion::not_fillable);
    }
    CHECK_THROWS_AS(stein_contractible_verdict(0), std::invalid_argument);
}

TEST_CASE("fs conjecture coefficients") {
    Certificate k1 = fs_conjecture_coefficient(1, -1, -1);
    CHECK(k1.coefficient == Slope(-1, 2));
    CHECK(k1.status == CertStatus::theorem);

    Certificate k3 = fs_conjecture_coefficient(3, -1, -1);
    CHECK(k3.coefficient == Slope(-1, 6));
    CHECK(k3.status == CertStatus::conjecture);
    CHECK(notes_contain(k3, "Sigma(2,3,12k+1)"));

    Certificate k2 = fs_conjecture_coefficient(2, 1, 1);
    CHECK(k2.coefficient == Slope(1, 4));
    CHECK(k2.status == CertStatus::conjecture);

    CHECK(fs_conjecture_coefficient(5, 1, -1).is_trivial());
    CHECK_THROWS_AS(fs_conjecture_coefficient(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(fs_conjecture_coefficient(2, 1, 3), std::invalid_argument);
}

TEST_CASE("fickle and fs agree at k = 1") {
    for (long long s = -20; s <= 20; ++s)
        for (int sign : {-1, 1}) {
            CHECK(fickle_certificate(s, sign, AmbientClass::acyclic).coefficient ==
                  fs_conjecture_coefficient(1, s, sign).coefficient);
        }
}

TEST_CASE("conjecture status exactly for k >= 2") {
    for (long long k = 1; k <= 10; ++k) {
        Certificate cert = fs_conjecture_coefficient(k, -1, -1);
        CHECK((cert.status == CertStatus::conjecture) == (k >= 2));
    }
}

TEST_CASE("every emitted certificate passes the homology check") {
    for (long long s = -10; s <= 10; ++s)
        for (int sign : {-1, 1}) {
            CHECK(fickle_certificate(s, sign, AmbientClass::acyclic).homology_check);
            CHECK(fs_conjecture_coefficient(2, s, sign).homology_check);
            auto [a, b] = plumbing_certificate(s, -s, sign, AmbientClass::acyclic);
            CHECK(a.homology_check);
            CHECK(b.homology_check);
        }
    for (long long m : {-9LL, -1LL, 1LL, 9LL}) {
        CHECK(slice_surgery_certificate(m).homology_check);
        CHECK(stein_contractible_verdict(m).homology_check);
    }
}

}  // TEST_SUITE
