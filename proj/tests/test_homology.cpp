#include <doctest.h>

#include <stdexcept>

#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "lensbound/homology.hpp"

using namespace lensbound;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Test-side determinant oracle: cofactor expansion along the first row.
Int cofactor_det(const IntMatrix& m) {
    if (m.n == 0) return 1;
    if (m.n == 1) return m.at(0, 0);
    Int det = 0;
    for (std::size_t j = 0; j < m.n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix minor(m.n - 1);
        for (std::size_t i = 1; i < m.n; ++i) {
            std::size_t col = 0;
            for (std::size_t k = 0; k < m.n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, col++) = m.at(i, k);
            }
        }
        Int term = m.at(0, j) * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
            return true;
        }
    }
    return false;
}

// Determinantal-divisor oracle: the k-th SNF diagonal entry equals
// gcd(k x k minors) / gcd((k-1) x (k-1) minors).
std::vector<Int> minor_gcd_diagonal(const IntMatrix& m) {
    std::vector<Int> gcds(m.n + 1, 0);
    gcds[0] = 1;
    for (std::size_t k = 1; k <= m.n; ++k) {
        Int g = 0;
        std::vector<std::size_t> rows(k);
        std::iota(rows.begin(), rows.end(), 0);
        do {
            std::vector<std::size_t> cols(k);
            std::iota(cols.begin(), cols.end(), 0);
            do {
                IntMatrix minor(k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = m.at(rows[i], cols[j]);
                g = gcd_int(g, cofactor_det(minor));
            } while (next_combination(cols, m.n));
        } while (next_combination(rows, m.n));
        gcds[k] = g;
    }
    std::vector<Int> diag(m.n);
    for (std::size_t k = 1; k <= m.n; ++k)
        diag[k - 1] = (gcds[k] == 0) ? Int(0) : Int(gcds[k] / gcds[k - 1]);
    return diag;
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("snf of simple matrices") {
    SnfResult id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.d == IntMatrix::identity(3));

    SnfResult uni = smith_normal_form(from_rows({{0, 1}, {1, -5}}));
    CHECK(uni.d == IntMatrix::identity(2));

    SnfResult diag = smith_normal_form(from_rows({{3, 0}, {0, 12}}));
    CHECK(diag.diagonal() == std::vector<Int>{3, 12});

    SnfResult zero = smith_normal_form(IntMatrix(2));
    CHECK(zero.diagonal() == std::vector<Int>{0, 0});

    CHECK(smith_normal_form(IntMatrix(0)).d.n == 0);
}

TEST_CASE("snf unimodularity on examples") {
    for (const IntMatrix& m :
         {from_rows({{0, 1}, {1, -5}}), from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}),
          from_rows({{3, 0}, {0, 12}})}) {
        SnfResult snf = smith_normal_form(m);
        Int du = determinant(snf.u);
        Int dv = determinant(snf.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
    }
}

TEST_CASE("snf diagonal matches the determinantal-divisor oracle") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long long> entry(-9, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        IntMatrix m(5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = entry(rng);
        std::vector<Int> expected = minor_gcd_diagonal(m);
        std::vector<Int> got = smith_normal_form(m).diagonal();
        REQUIRE(got == expected);
    }
}

TEST_CASE("determinant agrees with the cofactor oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> entry(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
        REQUIRE(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("h1 of surgery diagrams") {
    for (long long m = -50; m <= 50; ++m)
        CHECK(h1_of_surgery(from_rows({{0, 1}, {1, -m}})).is_trivial());

    AbelianGroup zero_surgery = h1_of_surgery(from_rows({{0}}));
    CHECK(zero_surgery.free_rank == 1);
    CHECK(zero_surgery.invariant_factors.empty());

    AbelianGroup chain = h1_of_surgery(chain_linking_matrix(NegCF{{-2, -2, -2}}));
    CHECK(chain == AbelianGroup{0, {4}});
    CHECK(chain.str() == "Z/4");

    CHECK_THROWS_AS(h1_of_surgery(from_rows({{0, 1}, {2, 0}})), std::invalid_argument);
}

TEST_CASE("homology sphere detection") {
    CHECK(is_homology_sphere(from_rows({{0, 1}, {1, -3}})));
    CHECK(!is_homology_sphere(from_rows({{-2}})));
    IntMatrix e8 =
        star_linking_matrix(-2, {NegCF{{-2}}, NegCF{{-2, -2}}, NegCF{{-2, -2, -2, -2}}});
    CHECK(e8.n == 8);
    CHECK(is_homology_sphere(e8));
    CHECK(h1_of_surgery(e8).is_trivial());
}

TEST_CASE("chain linking matrices") {
    IntMatrix single = chain_linking_matrix(NegCF{{-2}});
    CHECK(single.n == 1);
    CHECK(determinant(single) == -2);
    CHECK(cofactor_det(chain_linking_matrix(NegCF{{-2, -2, -2}})) == -4);
    Int det33 = determinant(chain_linking_matrix(NegCF{{-3, -3}}));
    CHECK((det33 == 8 || det33 == -8));
}

TEST_CASE("chain determinant equals p up to p = 120") {
    for (long long p = 2; p <= 120; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            Int det = determinant(chain_linking_matrix(neg_cf(p, q)));
            if (det < 0) det = -det;
            REQUIRE(det == p);
        }
}

TEST_CASE("star plumbing matrices") {
    IntMatrix sigma237 = star_linking_matrix(-1, {NegCF{{-2}}, NegCF{{-3}}, NegCF{{-7}}});
    Int det = determinant(sigma237);
    CHECK((det == 1 || det == -1));
    CHECK(determinant(sigma237) == cofactor_det(sigma237));

    IntMatrix small = star_linking_matrix(-2, {NegCF{{-2}}, NegCF{{-2}}});
    Int det_small = determinant(small);
    if (det_small < 0) det_small = -det_small;
    CHECK(det_small == 4);
    CHECK_THROWS_AS(star_linking_matrix(-2, {}), std::invalid_argument);
}

TEST_CASE("hantzsche double test") {
    CHECK(hantzsche_double_test(AbelianGroup{0, {3, 3}}) == AbelianGroup{0, {3}});
    CHECK(!hantzsche_double_test(AbelianGroup{0, {3}}).has_value());
    CHECK(hantzsche_double_test(AbelianGroup{0, {2, 2, 4, 4}}) == AbelianGroup{0, {2, 4}});
    CHECK(!hantzsche_double_test(AbelianGroup{0, {2, 2, 4, 8}}).has_value());
    CHECK(hantzsche_double_test(AbelianGroup{0, {}}) == AbelianGroup{0, {}});
    CHECK_THROWS_AS(hantzsche_double_test(AbelianGroup{1, {3, 3}}), std::invalid_argument);
}

TEST_CASE("hantzsche pairing agrees with primary decomposition") {
    // G + G holds iff every prime power occurs an even number of times
    // among the primary components.
    auto primary_even = [](const AbelianGroup& g) {
        std::map<std::pair<long long, int>, long long> counts;
        for (const Int& dd : g.invariant_factors) {
            long long d = dd.convert_to<long long>();
            for (long long prime = 2; prime <= d; ++prime) {
                if (d % prime != 0) continue;
                int k = 0;
                while (d % prime == 0) {
                    d /= prime;
                    ++k;
                }
                ++counts[{prime, k}];
            }
        }
        for (const auto& [key, count] : counts)
            if (count % 2 != 0) return false;
        return true;
    };
    for (long long p1 = 2; p1 <= 12; ++p1)
        for (long long p2 = 2; p2 <= 12; ++p2)
            for (long long p3 = p2; p3 <= 12; ++p3) {
                AbelianGroup g;
                IntMatrix m(3);
                m.at(0, 0) = p1;
                m.at(1, 1) = p2;
                m.at(2, 2) = p3;
                for (const Int& d : smith_normal_form(m).diagonal())
                    if (d > 1) g.invariant_factors.push_back(d);
                REQUIRE(hantzsche_double_test(g).has_value() == primary_even(g));
            }
}

TEST_CASE("h1 of lens sums") {
    CHECK(h1_of_lens_sum(parse_connected_sum("3,1#3,2")) == AbelianGroup{0, {3, 3}});
    CHECK(h1_of_lens_sum(parse_connected_sum("4,1#6,1")) == AbelianGroup{0, {2, 12}});
    CHECK(h1_of_lens_sum(parse_connected_sum("")).is_trivial());
}

TEST_CASE("L # -L always passes the double test") {
    for (long long p = 2; p <= 60; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            LensSpace lens = lens_normalize(p, q);
            ConnectedSum sum = make_connected_sum({lens, lens_reverse(lens)});
            REQUIRE(hantzsche_double_test(h1_of_lens_sum(sum)).has_value());
        }
    // multi-summand double
    ConnectedSum y = parse_connected_sum("3,1#5,2#7,3");
    std::vector<LensSpace> doubled = y.summands;
    for (const LensSpace& l : y.summands) doubled.push_back(lens_reverse(l));
    CHECK(hantzsche_double_test(h1_of_lens_sum(make_connected_sum(doubled))).has_value());
}

TEST_CASE("matrix file parsing") {
    std::istringstream good("2\n0 1\n1 -5\n");
    IntMatrix m = read_matrix(good);
    CHECK(m == from_rows({{0, 1}, {1, -5}}));

    std::istringstream short_file("2\n0 1\n1\n");
    CHECK_THROWS_AS(read_matrix(short_file), std::invalid_argument);
    std::istringstream bad_entry("1\nx\n");
    CHECK_THROWS_AS(read_matrix(bad_entry), std::invalid_argument);
    std::istringstream bad_dim("-1\n");
    CHECK_THROWS_AS(read_matrix(bad_dim), std::invalid_argument);
}

}  // TEST_SUITE
