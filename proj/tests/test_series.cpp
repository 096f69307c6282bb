#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "dycklat/covering.hpp"
#include "dycklat/errors.hpp"
#include "dycklat/poset.hpp"
#include "dycklat/series.hpp"
#include "dycklat/stats.hpp"

using namespace dycklat;

namespace {

Series1 random_series(std::mt19937_64& rng, int order) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Series1 s(order);
    for (int k = 0; k <= order; ++k) s.coeff(k) = RatC(Rat(num(rng), den(rng)));
    return s;
}

}  // namespace

TEST_CASE("truncated-series ring laws on random inputs") {
    std::mt19937_64 rng(0x5e21e5ull);
    for (int trial = 0; trial < 40; ++trial) {
        Series1 a = random_series(rng, 8);
        Series1 b = random_series(rng, 8);
        Series1 c = random_series(rng, 8);
        CHECK(((a * b) * c - a * (b * c)).is_zero());
        CHECK((a * b - b * a).is_zero());
        CHECK((a * (b + c) - (a * b + a * c)).is_zero());
        CHECK(((a + b) - (b + a)).is_zero());
        // Division inverts multiplication when the divisor is a unit.
        Series1 unit = b;
        unit.coeff(0) = RatC(Rat(1));
        CHECK(((a * unit).div(unit) - a).is_zero());
    }
}

TEST_CASE("sqrt contract") {
    std::mt19937_64 rng(0x59a2ull);
    for (int trial = 0; trial < 20; ++trial) {
        Series1 a = random_series(rng, 10);
        a.coeff(0) = RatC(Rat(1));
        Series1 s = sqrt_unit(a);
        CHECK((s * s - a).is_zero());
        CHECK(s.coeff(0) == RatC(Rat(1)));
    }
}

TEST_CASE("Catalan series") {
    Series1 c = catalan_series(12);
    const long long expect[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int k = 0; k <= 10; ++k) CHECK(series1_int_coeff(c, k) == expect[k]);
    // C = 1 + x C^2
    Series1 rhs = series_one(12) + (c * c).shift_up(1);
    CHECK((c - rhs).is_zero());
    for (int n = 0; n <= 12; ++n) CHECK(catalan_int(n) == Int(catalan_ull(n)));
}

TEST_CASE("trivariate A series") {
    Series3 a = A_series(kDefaultOrder3);

    CHECK(a.coeff(2) == PolyYZ::monomial(1, 0) + PolyYZ::monomial(0, 1));

    PolyYZ x5;  // y^4+7y^3z+13y^2z^2+7yz^3+z^4+5y^2z+5yz^2+3yz
    x5 += PolyYZ::monomial(4, 0);
    x5 += PolyYZ::monomial(3, 1, 7);
    x5 += PolyYZ::monomial(2, 2, 13);
    x5 += PolyYZ::monomial(1, 3, 7);
    x5 += PolyYZ::monomial(0, 4);
    x5 += PolyYZ::monomial(2, 1, 5);
    x5 += PolyYZ::monomial(1, 2, 5);
    x5 += PolyYZ::monomial(1, 1, 3);
    CHECK(a.coeff(5) == x5);

    Series3 tally = series3_from_tally(kDefaultOrder3);
    CHECK((a - tally).is_zero());

    CHECK(series3_yz_symmetric(a));
    CHECK(verify_A_functional_equation(a));
    CHECK(verify_A_functional_equation(tally));
    CHECK(verify_A_functional_equation(A_series(2)));
}

TEST_CASE("covering-count series E") {
    Series1 e = E_series(12);
    const long long expect[] = {1, 5, 20, 76, 286, 1078, 4081, 15521};
    for (int n = 2; n <= 9; ++n) {
        CHECK(series1_int_coeff(e, n) == expect[n - 2]);
        CHECK(E_coeff(n) == expect[n - 2]);
    }
    CHECK(E_coeff(2) == binomial(2, 0));
    for (int n = 2; n <= 10; ++n) CHECK(E_coeff(n) == Int(total_coverings(n)));
}

TEST_CASE("irreducible-count series K and L") {
    Series1 k = K_series(12);
    for (int n = 1; n <= 12; ++n) {
        CHECK(K_coeff(n) == (Int(1) << (n - 1)) - 1);
        CHECK(series1_int_coeff(k, n) == K_coeff(n));
    }
    CHECK(K_coeff(4) == 7);
    for (int n = 1; n <= 10; ++n) {
        unsigned long long with_s1 = 0;
        for (const DyckPath& p : enumerate_paths(n))
            if (stat_s(p) == 1) ++with_s1;
        CHECK(Int(with_s1) == K_coeff(n));
    }

    Series1 l = L_series(12);
    const long long lexp[] = {3, 2, 3, 5, 8, 13, 21, 34};  // 3, then Fibonacci
    for (int n = 3; n <= 10; ++n) CHECK(series1_int_coeff(l, n) == lexp[n - 3]);
    for (int n = 1; n <= 10; ++n) {
        unsigned long long doubly = 0;
        for (const DyckPath& p : enumerate_paths(n))
            if (stat_s(p) == 1 && stat_t(p) == 1) ++doubly;
        CHECK(Int(doubly) == series1_int_coeff(l, n));
    }
}

TEST_CASE("interval series at y = 1") {
    Series1 j1 = J1_series(12);
    Series1 i1 = I1_series(12);
    const long long jexp[] = {1, 2, 8, 40, 224, 1344, 8448, 54912, 366080};
    const long long iexp[] = {1, 3, 13, 67, 381, 2307, 14589, 95235, 636925};
    for (int n = 1; n <= 9; ++n) {
        CHECK(series1_int_coeff(j1, n) == jexp[n - 1]);
        CHECK(series1_int_coeff(i1, n) == iexp[n - 1]);
        CHECK(J1_coeff(n) == jexp[n - 1]);
        CHECK(I1_coeff(n) == iexp[n - 1]);
        CHECK(J1_coeff(n) == (Int(1) << (n - 1)) * catalan_int(n - 1));
    }
    // J = x + 2 J^2
    Series1 rhs = series_x(12) + (j1 * j1).scale(2);
    CHECK((j1 - rhs).is_zero());
}

TEST_CASE("bivariate interval series J and I") {
    SeriesXY j = J_series(kDefaultOrder3);
    SeriesXY i = I_series(kDefaultOrder3);

    PolyY jx4;  // (14y^2 + 15y + 11) y^2
    jx4 += PolyY::monomial(4, 14);
    jx4 += PolyY::monomial(3, 15);
    jx4 += PolyY::monomial(2, 11);
    CHECK(j.coeff(4) == jx4);

    PolyY ix4;  // (14y^3 + 20y^2 + 20y + 13) y
    ix4 += PolyY::monomial(4, 14);
    ix4 += PolyY::monomial(3, 20);
    ix4 += PolyY::monomial(2, 20);
    ix4 += PolyY::monomial(1, 13);
    CHECK(i.coeff(4) == ix4);

    // Specializations at y = 1 match the univariate series.
    Series1 j1 = J1_series(kDefaultOrder3), i1 = I1_series(kDefaultOrder3);
    CHECK((seriesxy_at_y1(j) - j1).is_zero());
    CHECK((seriesxy_at_y1(i) - i1).is_zero());

    // Buckets from the brute-force interval tables, n <= 8.
    for (int n = 1; n <= 8; ++n) {
        IntervalTable t = count_intervals(build_hasse(n, CoveringRelation::restricted()));
        for (int k = 1; k <= n; ++k) {
            unsigned long long all = t.by_last_run.count(k) ? t.by_last_run.at(k) : 0;
            unsigned long long prm = t.prime_by_last_run.count(k) ? t.prime_by_last_run.at(k) : 0;
            CHECK(i.coeff(n).coeff(k) == Rat(all));
            CHECK(j.coeff(n).coeff(k) == Rat(prm));
        }
    }
}

TEST_CASE("kernel root and kernel system") {
    Series1 y0 = kernel_root(10);
    CHECK(y0.coeff(0) == RatC(Rat(1)));
    KernelResiduals r = verify_kernel_equations(8);
    CHECK(r.eq1_zero);
    CHECK(r.eq2_zero);
}

TEST_CASE("interval identities") {
    CHECK(verify_lemma_interval_split(kDefaultOrder3));
    CHECK(verify_lemma_prime_upper(kDefaultOrder3));
    CHECK(verify_I_from_J(kDefaultOrder3));
    CHECK(verify_J_quadratic(12));
}

TEST_CASE("Tamari reference counts") {
    TamariReference t4 = tamari_reference(4);
    CHECK(t4.coverings == 21);
    CHECK(t4.irreducibles == 6);
    CHECK(t4.intervals == 68);

    for (int n = 1; n <= 7; ++n) {
        PosetGraph g = build_hasse(n, CoveringRelation::tamari());
        TamariReference t = tamari_reference(n);
        CHECK(t.coverings == Int(g.edge_count));
        if (n >= 2)
            CHECK(t.irreducibles == Int(irreducibles(g).meet_irreducible.size()));
        CHECK(t.intervals == Int(count_intervals(g).total));
    }
}

TEST_CASE("ratio report") {
    auto rows = ratio_report(12);
    REQUIRE(!rows.empty());
    Rat prev_cov = 0;
    for (const RatioRow& r : rows) {
        if (r.n == 4) {
            CHECK(r.covering_ratio == Rat(21, 20));
            CHECK(r.interval_ratio == Rat(68, 67));
        }
        if (r.n >= 4) CHECK(r.covering_ratio > prev_cov);  // 1 at n = 2, 3, then rising
        if (r.n >= 2) CHECK(r.covering_ratio < Rat(3, 2));
        prev_cov = r.covering_ratio;
    }
}

TEST_CASE("fibonacci words of doubly irreducible paths") {
    Series1 l = L_series(11);
    for (int n = 4; n <= 10; ++n) {
        std::set<std::string> images;
        for (const DyckPath& p : enumerate_paths(n)) {
            if (stat_s(p) != 1 || stat_t(p) != 1) {
                if (n >= 4) CHECK_THROWS_AS(fibonacci_word(p), BadInput);
                continue;
            }
            std::string w = fibonacci_word(p);
            CHECK(w.size() == static_cast<std::size_t>(n - 3));
            CHECK(w.find("11") == std::string::npos);
            CHECK(images.insert(w).second);  // injective
        }
        // Onto: image size equals the count of all length-(n-3) words avoiding 11.
        CHECK(Int(images.size()) == series1_int_coeff(l, n));
        unsigned long long all_words = 0;
        for (unsigned long long mask = 0; mask < (1ull << (n - 3)); ++mask)
            if ((mask & (mask >> 1)) == 0) ++all_words;
        CHECK(images.size() == all_words);
    }
}

TEST_CASE("rendering smoke") {
    CHECK(to_string(series_x(2)) == "x + O(x^3)");
    Series1 c = catalan_series(3);
    CHECK(to_string(c).find("5*x^3") != std::string::npos);
    nlohmann::json j = series_json(J_series(3));
    CHECK(j.contains("coeffs"));
}
