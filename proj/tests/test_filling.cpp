#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <string>

#include "lensbound/filling.hpp"
#include "lensbound/homology.hpp"

using namespace lensbound;

namespace {

bool derivation_contains(const Verdict& v, const std::string& needle) {
    for (const DerivationStep& step : v.derivation)
        if (step.text.find(needle) != std::string::npos) return true;
    return false;
}

long long witness_value(const Verdict& v, const std::string& name) {
    for (const Witness& w : v.witnesses)
        for (const auto& [key, value] : w.values)
            if (key == name) return value;
    return -1;
}

}  // namespace

TEST_SUITE("filling") {

TEST_CASE("lisca spot values") {
    Verdict v41 = lisca_qhb_filling(lens_normalize(4, 1));
    CHECK(v41.yes);
    CHECK(witness_value(v41, "m") == 2);
    CHECK(witness_value(v41, "h") == 1);

    Verdict v95 = lisca_qhb_filling(lens_normalize(9, 5));
    CHECK(v95.yes);
    CHECK(witness_value(v95, "m") == 3);
    CHECK(witness_value(v95, "h") == 2);

    Verdict v92 = lisca_qhb_filling(lens_normalize(9, 2));
    CHECK(v92.yes);
    CHECK(witness_value(v92, "m") == 3);
    CHECK(witness_value(v92, "h") == 1);

    CHECK(!lisca_qhb_filling(lens_normalize(9, 4)).yes);
    CHECK(!lisca_qhb_filling(lens_normalize(7, 3)).yes);  // not a square
    CHECK_THROWS_AS(lisca_qhb_filling(lens_normalize(1, 0)), std::invalid_argument);
}

TEST_CASE("lisca is orientation sensitive") {
    CHECK(lisca_qhb_filling(lens_normalize(4, 1)).yes);
    Verdict v43 = lisca_qhb_filling(lens_normalize(4, 3));
    CHECK(!v43.yes);
    CHECK(derivation_contains(v43, "3 cannot be written as 2h-1 with h coprime to 2"));
    CHECK(!v43.bounds.empty());
}

TEST_CASE("lisca core agrees with the verdict builder") {
    for (long long p = 2; p <= 150; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            REQUIRE(lisca_qhb_accepts(p, q) == lisca_qhb_filling(lens_normalize(p, q)).yes);
        }
}

TEST_CASE("sum filling verdicts") {
    Verdict v41 = sum_qhb_filling(4, 1);
    CHECK(!v41.yes);
    CHECK(derivation_contains(v41, "3 cannot be written as 2h-1 with h coprime to 2"));

    Verdict v92 = sum_qhb_filling(9, 2);
    CHECK(!v92.yes);

    CHECK_THROWS_AS(sum_qhb_filling(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(sum_qhb_filling(4, 2), std::invalid_argument);
}

TEST_CASE("sum filling is never possible up to p = 300") {
    for (long long p = 2; p <= 300; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            REQUIRE(!(lisca_qhb_accepts(p, q) && lisca_qhb_accepts(p, p - q)));
        }
}

TEST_CASE("pair embedding spot values") {
    CHECK(embeds_s4_pair(lens_normalize(3, 1), lens_normalize(3, 2)).yes);
    CHECK(!embeds_s4_pair(lens_normalize(4, 1), lens_normalize(4, 3)).yes);
    CHECK(embeds_s4_pair(lens_normalize(5, 2), lens_normalize(5, 2)).yes);
    CHECK(!embeds_s4_pair(lens_normalize(3, 1), lens_normalize(5, 2)).yes);
    CHECK(!embeds_s4_pair(lens_normalize(7, 2), lens_normalize(7, 2)).yes);
    CHECK_THROWS_AS(embeds_s4_pair(lens_normalize(1, 0), lens_normalize(3, 1)),
                    std::invalid_argument);
}

TEST_CASE("sum embedding spot values") {
    Verdict yes = embeds_s4_sum(parse_connected_sum("3,1#3,2"));
    CHECK(yes.yes);
    CHECK(witness_value(yes, "p") == 3);
    CHECK(witness_value(yes, "q") == 1);

    CHECK(!embeds_s4_sum(parse_connected_sum("3,1#3,1")).yes);
    CHECK(!embeds_s4_sum(parse_connected_sum("5,2")).yes);
    CHECK(embeds_s4_sum(parse_connected_sum("5,2#5,2")).yes);
    CHECK(embeds_s4_sum(parse_connected_sum("")).yes);  // S^3 = S^3 # -S^3
}

TEST_CASE("strict odd flag") {
    CHECK(!embeds_s4_sum(parse_connected_sum("4,1#4,3"), true).yes);
    CHECK(embeds_s4_sum(parse_connected_sum("4,1#4,3"), false).yes);
    CHECK(!embeds_s4_sum(parse_connected_sum("4,1#4,1"), false).yes);
}

TEST_CASE("pair and sum embeddings agree on doubles up to p = 60") {
    for (long long p = 2; p <= 60; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            LensSpace lens = lens_normalize(p, q);
            LensSpace rev = lens_reverse(lens);
            bool pair = embeds_s4_pair(lens, rev).yes;
            bool sum = embeds_s4_sum(make_connected_sum({lens, rev}), true).yes;
            REQUIRE(pair == sum);
        }
}

TEST_CASE("every yes sum passes the Hantzsche test") {
    for (long long p = 2; p <= 60; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            LensSpace lens = lens_normalize(p, q);
            for (const ConnectedSum& sum :
                 {make_connected_sum({lens, lens_reverse(lens)}),
                  make_connected_sum({lens, lens}),
                  make_connected_sum({lens, lens, lens_reverse(lens)})}) {
                if (!embeds_s4_sum(sum).yes) continue;
                REQUIRE(hantzsche_double_test(h1_of_lens_sum(sum)).has_value());
            }
        }
}

TEST_CASE("punctured embeddings") {
    CHECK(punctured_embeds_r4(lens_normalize(3, 1)));
    CHECK(!punctured_embeds_r4(lens_normalize(4, 1)));
    CHECK(punctured_embeds_r4(lens_normalize(1, 0)));
    CHECK(punctured_embeds_r4(lens_normalize(9, 2)));
    CHECK(!punctured_embeds_r4(lens_normalize(2, 1)));
}

TEST_CASE("verdict invariants hold across sweeps") {
    for (long long p = 2; p <= 40; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (const Verdict& v : {lisca_qhb_filling(lens_normalize(p, q)),
                                     sum_qhb_filling(p, q),
                                     embeds_s4_pair(lens_normalize(p, q),
                                                    lens_reverse(lens_normalize(p, q)))}) {
                if (v.yes)
                    REQUIRE(!v.witnesses.empty());
                else
                    REQUIRE(!v.bounds.empty());
            }
        }
}

}  // TEST_SUITE
