#include <cmath>
#include <random>

#include "doctest.h"
#include "strofa/stats.hpp"

using namespace strofa;

TEST_CASE("pearson: perfect and anti-perfect correlation") {
    std::vector<double> x{1, 2, 3};
    CHECK(pearson_r(x, x).r == doctest::Approx(1.0));
    std::vector<double> y{3, 2, 1};
    CHECK(pearson_r(x, y).r == doctest::Approx(-1.0));
    CHECK(pearson_r(x, x).p == doctest::Approx(0.0));
}

TEST_CASE("pearson: pinned hand computation") {
    // x=(1..5), y=(2,1,4,3,6): sxy=10, sxx=10, syy=14.8
    // r = 10/sqrt(148)
    std::vector<double> x{1, 2, 3, 4, 5};
    std::vector<double> y{2, 1, 4, 3, 6};
    const double expected = 10.0 / std::sqrt(148.0);
    CHECK(pearson_r(x, y).r == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("pearson: invariance under positive affine transforms") {
    std::mt19937 rng(3);
    std::normal_distribution<double> norm(0.0, 1.0);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<double> x(25), y(25), x2(25), y2(25);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = norm(rng);
            y[i] = norm(rng) + 0.5 * x[i];
            x2[i] = 3.0 * x[i] + 7.0;
            y2[i] = 0.25 * y[i] - 2.0;
        }
        const double r1 = pearson_r(x, y).r;
        const double r2 = pearson_r(x2, y2).r;
        CHECK(r1 == doctest::Approx(r2).epsilon(1e-12));
    }
}

TEST_CASE("pearson: degenerate inputs") {
    std::vector<double> flat{1, 1, 1, 1};
    std::vector<double> x{1, 2, 3, 4};
    CHECK_THROWS_AS(pearson_r(x, flat), DegenerateInputError);
    std::vector<double> small{1, 2};
    CHECK_THROWS_AS(pearson_r(small, small), DegenerateInputError);
    std::vector<double> mismatched{1, 2, 3};
    std::vector<double> other{1, 2, 3, 4};
    CHECK_THROWS_AS(pearson_r(mismatched, other), DegenerateInputError);
}

TEST_CASE("student t tail probabilities against closed forms") {
    // df=1 (Cauchy): P(|T| >= 1) = 0.5
    CHECK(student_t_two_tailed(1.0, 1) == doctest::Approx(0.5).epsilon(1e-10));
    // df=2: CDF(t) = 1/2 + t / (2*sqrt(2 + t^2)); P(|T| >= sqrt(2)) = 1 - 2*(CDF-0.5)
    const double t = std::sqrt(2.0);
    const double cdf = 0.5 + t / (2.0 * std::sqrt(2.0 + t * t));
    CHECK(student_t_two_tailed(t, 2) == doctest::Approx(2.0 * (1.0 - cdf)).epsilon(1e-10));
    CHECK(student_t_two_tailed(0.0, 5) == doctest::Approx(1.0));
}

TEST_CASE("regularized incomplete beta against closed forms") {
    // I_x(1, 1) = x
    CHECK(regularized_incomplete_beta(1, 1, 0.3) == doctest::Approx(0.3).epsilon(1e-12));
    // I_x(2, 1) = x^2
    CHECK(regularized_incomplete_beta(2, 1, 0.7) == doctest::Approx(0.49).epsilon(1e-10));
    // I_x(1, 2) = 1 - (1-x)^2
    CHECK(regularized_incomplete_beta(1, 2, 0.25) == doctest::Approx(1 - 0.75 * 0.75).epsilon(1e-10));
    // I_x(1/2, 1/2) = (2/pi) asin(sqrt(x))
    CHECK(regularized_incomplete_beta(0.5, 0.5, 0.4) ==
          doctest::Approx(2.0 / M_PI * std::asin(std::sqrt(0.4))).epsilon(1e-9));
    CHECK(regularized_incomplete_beta(3, 4, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(3, 4, 1.0) == 1.0);
}

TEST_CASE("kappa: perfect agreement") {
    std::vector<std::string> a{"x", "y", "x", "z", "y"};
    CHECK(cohen_kappa(a, a) == doctest::Approx(1.0));
}

TEST_CASE("kappa: pinned 2x2 contingency example") {
    // po = 4/6, pe = 1/2, kappa = 1/3
    std::vector<std::string> a{"x", "x", "y", "y", "x", "y"};
    std::vector<std::string> b{"x", "y", "y", "y", "x", "x"};
    CHECK(cohen_kappa(a, b) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("kappa: independent labels drift to chance level") {
    std::mt19937 rng(17);
    std::bernoulli_distribution coin(0.5);
    std::vector<std::string> a, b;
    for (int i = 0; i < 20000; ++i) {
        a.push_back(coin(rng) ? "x" : "y");
        b.push_back(coin(rng) ? "x" : "y");
    }
    CHECK(std::fabs(cohen_kappa(a, b)) < 0.03);
}

TEST_CASE("kappa: saturated chance agreement") {
    std::vector<std::string> same{"x", "x", "x"};
    CHECK(cohen_kappa(same, same) == doctest::Approx(1.0));
    std::vector<std::string> diff{"y", "x", "x"};
    CHECK(cohen_kappa(same, diff) == doctest::Approx(0.0));
}

TEST_CASE("kappa: mismatched lengths") {
    std::vector<std::string> a{"x"};
    std::vector<std::string> b{"x", "y"};
    CHECK_THROWS_AS(cohen_kappa(a, b), DegenerateInputError);
}
