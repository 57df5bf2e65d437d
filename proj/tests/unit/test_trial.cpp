#include "oracles.hpp"

#include "robin/error.hpp"
#include "robin/trial.hpp"

#include <doctest.h>

#include <cmath>

using namespace robin::trial;

namespace {

DimensionSpec dim_for_nu(double nu) { return DimensionSpec::make(static_cast<int>(2.0 * nu + 2.0)); }

}  // namespace

TEST_CASE("endpoint values of q") {
    for (double nu : {0.0, 0.5, 1.0, 2.0}) {
        for (double sigma : {0.1, 1.0, 10.0}) {
            TrialFunctions f(dim_for_nu(nu), sigma);
            CHECK(f.q(0.0) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(std::abs(f.q(1.0)) < 1e-9);
        }
    }
}

TEST_CASE("w against the standard library closed form") {
    TrialFunctions f(DimensionSpec::make(2), 1.0);
    for (double r : {0.01, 0.2, 0.5, 0.9, 1.0}) {
        const double ref = std::cyl_bessel_j(1.0, f.beta() * r) / std::cyl_bessel_j(0.0, f.alpha() * r);
        CHECK(f.w(r) == doctest::Approx(ref).epsilon(1e-11));
    }
}

TEST_CASE("q is r w'/w by finite differences") {
    TrialFunctions f(DimensionSpec::make(3), 2.0);
    for (double r : {0.1, 0.4, 0.8}) {
        const double h = 1e-6;
        const double wp = (f.w(r + h) - f.w(r - h)) / (2 * h);
        CHECK(f.q(r) == doctest::Approx(r * wp / f.w(r)).epsilon(1e-7));
        const double qp = (f.q(r + h) - f.q(r - h)) / (2 * h);
        CHECK(f.q_prime(r) == doctest::Approx(qp).epsilon(1e-6));
        const double bp = (f.B(r + h) - f.B(r - h)) / (2 * h);
        CHECK(f.B_prime(r) == doctest::Approx(bp).epsilon(1e-6));
    }
}

TEST_CASE("series branch is continuous with the closed form") {
    for (double nu : {0.0, 1.0}) {
        TrialFunctions f(dim_for_nu(nu), 1.0);
        const double r0 = TrialFunctions::kSeriesRadius;
        for (auto g : {&TrialFunctions::w, &TrialFunctions::q, &TrialFunctions::B, &TrialFunctions::w_over_r}) {
            CHECK((f.*g)(r0 * (1 - 1e-9)) == doctest::Approx((f.*g)(r0 * (1 + 1e-9))).epsilon(1e-8));
        }
    }
}

TEST_CASE("limits at the origin") {
    for (double nu : {0.0, 0.5, 1.0, 2.0}) {
        TrialFunctions f(dim_for_nu(nu), 1.0);
        const auto lim = series_limits(f);
        const double slope = std::pow(f.beta(), nu + 1) / (2 * (nu + 1) * std::pow(f.alpha(), nu));
        CHECK(lim.w_slope == doctest::Approx(slope).epsilon(1e-12));
        CHECK(f.w_over_r(1e-3) == doctest::Approx(slope).epsilon(1e-5));
        CHECK(f.B(0.0) == doctest::Approx(lim.B_origin).epsilon(1e-12));
        CHECK(f.q_second_at_origin() < 0.0);
    }
    TrialFunctions f0(DimensionSpec::make(2), 1.0);
    CHECK(std::isinf(series_limits(f0).w_slope_nu_form));
    CHECK(std::isinf(f0.A(0.0)));
}

TEST_CASE("profile monotonicity properties") {
    for (double nu : {0.0, 0.5, 1.0, 2.0}) {
        for (double sigma : {0.1, 1.0, 10.0}) {
            const auto p = trial_profile(dim_for_nu(nu), sigma, 256);
            for (std::size_t i = 1; i < p.r.size(); ++i) {
                CHECK(p.w[i] > p.w[i - 1]);
                CHECK(p.B[i] < p.B[i - 1]);
                CHECK(q_prime(p, static_cast<int>(i)) < 0.0);
                if (i + 1 < p.r.size()) {
                    CHECK(p.q[i] > 0.0);
                    CHECK(p.q[i] < 1.0);
                }
            }
        }
    }
}

TEST_CASE("Rayleigh identity") {
    for (double nu : {0.0, 0.5, 1.0, 2.0}) {
        for (double sigma : {0.1, 1.0, 10.0}) {
            CHECK(rayleigh_identity_residual(trial_profile(dim_for_nu(nu), sigma, 256)) <= 1e-8);
        }
    }
}

TEST_CASE("gap quotient of the unscaled trial function equals the eigenvalue gap") {
    const auto dim = DimensionSpec::make(2);
    TrialFunctions f(dim, 1.0);
    const double g = gap_quotient(dim, scaled_trial(f, 1.0), ball_weight(dim, f.alpha()), 1.0);
    CHECK(g == doctest::Approx(f.beta() * f.beta() - f.alpha() * f.alpha()).epsilon(1e-8));
}

TEST_CASE("extension past the unit radius is constant") {
    TrialFunctions f(DimensionSpec::make(2), 1.0);
    CHECK(f.w_extended(1.5) == doctest::Approx(f.w(1.0)));
    CHECK(f.w_extended_prime(1.5) == 0.0);
    CHECK(f.w_extended(0.5) == doctest::Approx(f.w(0.5)));
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(trial_profile(DimensionSpec::make(2), 1.0, 8), robin::DomainError);
    CHECK_THROWS_AS(TrialFunctions(DimensionSpec::make(2), -1.0), robin::DomainError);
}

TEST_CASE("boundary and origin values of B and q'") {
    for (double nu : {0.0, 0.5, 1.0, 2.0}) {
        for (double sigma : {0.1, 1.0, 10.0}) {
            TrialFunctions f(dim_for_nu(nu), sigma);
            const double a2 = f.alpha() * f.alpha(), b2 = f.beta() * f.beta();
            CHECK(f.B(1.0) == doctest::Approx((2 * nu + 1) * f.w(1.0) * f.w(1.0)).epsilon(1e-9));
            CHECK(f.q_prime(1.0) == doctest::Approx(2 * nu + 1 + a2 - b2).epsilon(1e-9));
            CHECK(f.q_prime(1.0) < 0.0);
            CHECK(std::abs(f.q_prime(1e-6)) < 1e-4);
        }
    }
}

TEST_CASE("Rayleigh identity in the near-Dirichlet regime") {
    CHECK(rayleigh_identity_residual(trial_profile(DimensionSpec::make(2), 100.0, 256)) <= 1e-7);
}

TEST_CASE("gap quotient of other radial profiles") {
    const auto dim = DimensionSpec::make(2);
    TrialFunctions f(dim, 1.0);
    const auto weight = ball_weight(dim, f.alpha());
    const double gap = f.beta() * f.beta() - f.alpha() * f.alpha();
    // g = 1: only the angular term survives. It is finite for N >= 3 and diverges at the origin for N = 2.
    const RadialFunction one{[](double) { return 1.0; }, [](double) { return 0.0; }};
    const auto d3 = DimensionSpec::make(3);
    TrialFunctions f3(d3, 1.0);
    CHECK(gap_quotient(d3, one, ball_weight(d3, f3.alpha()), 1.0) > 0.0);
    CHECK_THROWS(gap_quotient(dim, one, weight, 1.0));
    // Other admissible profiles vanishing at the origin give an upper bound for the gap.
    for (double p : {1.0, 1.5, 2.0}) {
        const RadialFunction g{[p](double r) { return std::pow(r, p); },
                               [p](double r) { return p * std::pow(r, p - 1.0); }};
        CHECK(gap_quotient(dim, g, weight, 1.0) >= gap - 1e-9);
    }
}
