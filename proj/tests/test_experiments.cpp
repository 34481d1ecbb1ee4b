#include "kuramoto/experiments.hpp"

#include "kuramoto/fixpoint.hpp"
#include "kuramoto/network.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace kuramoto;

namespace {

constexpr double pi = std::numbers::pi;

// direct partial sums of i * cos(2 pi i / n), frozen oracle for small n
double partial_sum(int n, int r) {
    double s = 0.0;
    for (int i = 1; i <= r; ++i) s += i * std::cos(2.0 * pi * i / n);
    return s;
}

// independent half-split cut evaluation straight from the offset rule
double half_cut_by_enumeration(int n, int r) {
    std::vector<double> theta(n);
    for (int i = 0; i < n; ++i) theta[i] = 2.0 * pi * i / n;
    auto in_half = [&](int v) { return v < n / 2; };
    double sum = 0.0;
    for (int s = 1; s <= r; ++s)
        for (int i = 0; i < n; ++i) {
            int j = (i + s) % n;
            if (s * 2 == n && i >= n / 2) continue; // diameters enumerate twice
            if (in_half(i) != in_half(j)) sum += std::cos(theta[i] - theta[j]);
        }
    return sum;
}

} // namespace

TEST_SUITE("experiments") {

TEST_CASE("degree threshold values") {
    auto row6 = degree_threshold(6);
    CHECK(row6.r == 2);
    CHECK(row6.ratio == doctest::Approx(2.0 / 3.0));
    // bracketing check against the direct sums: 0.5 then -0.5
    CHECK(partial_sum(6, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(partial_sum(6, 2) == doctest::Approx(-0.5).epsilon(1e-12));

    auto row10 = degree_threshold(10);
    CHECK(row10.r == 4);
    CHECK(row10.ratio == doctest::Approx(0.8));
    CHECK(partial_sum(10, 3) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(partial_sum(10, 4) < 0.0);

    CHECK_THROWS_AS(degree_threshold(2), std::invalid_argument);
}

TEST_CASE("degree threshold bracketing and growth") {
    int prev = 0;
    for (int n = 6; n <= 200; ++n) {
        auto row = degree_threshold(n);
        CHECK(partial_sum(n, row.r) <= 0.0);
        if (row.r >= 2) CHECK(partial_sum(n, row.r - 1) > 0.0);
        CHECK(row.r >= prev);
        prev = row.r;
    }
}

TEST_CASE("degree threshold asymptotics") {
    auto row = degree_threshold(10000);
    CHECK(row.ratio > 0.73);
    CHECK(row.ratio < 0.75);
}

TEST_CASE("half split cut") {
    // ring of six: two crossing edges at a sixth of a turn each
    CHECK(twisted_half_cut(6, 1) == doctest::Approx(1.0).epsilon(1e-12));

    for (int n : {8, 12, 16, 20})
        for (int r = 1; r <= n / 2; ++r)
            CHECK(twisted_half_cut(n, r) ==
                  doctest::Approx(half_cut_by_enumeration(n, r)).epsilon(1e-12));

    // interior offsets reproduce twice the threshold partial sum
    for (int n : {8, 12, 16})
        for (int r = 1; r < n / 2; ++r)
            CHECK(twisted_half_cut(n, r) ==
                  doctest::Approx(2.0 * partial_sum(n, r)).epsilon(1e-11));

    // the half split and the threshold sum agree in sign
    CHECK(twisted_half_cut(12, 2) > 0.0);
    CHECK(partial_sum(12, 2) > 0.0);

    CHECK_THROWS_AS(twisted_half_cut(7, 1), std::invalid_argument);
    CHECK_THROWS_AS(twisted_half_cut(8, 5), std::invalid_argument);
}

TEST_CASE("survey on the triangle certifies every non-zero point") {
    auto report = survey_nonzero_fixed_points(3, {}, 300, 1);
    CHECK(report.zero_class + report.non_zero + report.newton_failures == 300);
    CHECK(report.non_zero > 0); // the triangle states do get hit
    CHECK(report.all_certified());
    CHECK(report.unstable_by_spectrum == report.non_zero);
    CHECK(report.nonpositive_cut == report.non_zero);
    CHECK(report.nonpositive_singleton == report.non_zero);
}

TEST_CASE("survey handles near-complete variants") {
    auto report = survey_nonzero_fixed_points(6, {{0, 1}, {2, 3}, {4, 5}}, 150, 7);
    CHECK(report.zero_class + report.non_zero + report.newton_failures == 150);
    CHECK(report.all_certified());
    CHECK(report.graph_label == "complete minus 0-1,2-3,4-5");
}

TEST_CASE("survey at the top of the exhaustive range") {
    auto report = survey_nonzero_fixed_points(10, {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}, 60, 3);
    CHECK(report.zero_class + report.non_zero + report.newton_failures == 60);
    CHECK(report.all_certified());
}

TEST_CASE("survey reports are deterministic") {
    auto a = survey_nonzero_fixed_points(4, {}, 120, 11);
    auto b = survey_nonzero_fixed_points(4, {}, 120, 11);
    CHECK(to_text(a) == to_text(b));
}

TEST_CASE("survey input validation") {
    CHECK_THROWS_AS(survey_nonzero_fixed_points(2, {}, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(survey_nonzero_fixed_points(13, {}, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(survey_nonzero_fixed_points(5, {}, 0, 0), std::invalid_argument);
    // overlapping non-edges would drop a degree below n-2
    CHECK_THROWS_AS(survey_nonzero_fixed_points(6, {{0, 1}, {1, 2}}, 10, 0),
                    std::invalid_argument);
}

} // TEST_SUITE
