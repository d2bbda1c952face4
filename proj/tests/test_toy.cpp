#include <gtest/gtest.h>

#include <cmath>

#include "gkmod/toy.hpp"

namespace gkmod {
namespace {

constexpr double kTight = 1e-12;

void expect_mat2_near(const Mat2& got, const Mat2& want, double tol) {
    EXPECT_NEAR(got.a, want.a, tol);
    EXPECT_NEAR(got.b, want.b, tol);
    EXPECT_NEAR(got.c, want.c, tol);
    EXPECT_NEAR(got.d, want.d, tol);
}

TEST(ToyPi, PinnedMatrices) {
    expect_mat2_near(toy_pi(0.0, group_exp(3.7)), Mat2::identity(), kTight);
    expect_mat2_near(toy_pi(1.0, group_delta()), {0, 1, 1, 0}, kTight);
    expect_mat2_near(toy_pi(1.0, group_exp(std::log(2.0))), {2.0, 0, 0, 0.5}, kTight);
}

TEST(ToyPi, MatrixInvariants) {
    for (double nu : {0.0, 1.0, -0.5, 0.25}) {
        for (double t : {0.0, 1.0, -2.0, 5.0}) {
            EXPECT_NEAR(toy_pi(nu, group_exp(t)).det(), 1.0, 1e-10);
            EXPECT_NEAR(toy_Pi(nu, group_exp(t)).det(), 1.0, 1e-10);
        }
        const Mat2 d_pi = toy_pi(nu, group_delta());
        const Mat2 d_Pi = toy_Pi(nu, group_delta());
        expect_mat2_near(d_pi * d_pi, Mat2::identity(), kTight);
        expect_mat2_near(d_Pi * d_Pi, Mat2::identity(), kTight);
    }
}

TEST(ToyPi, GroupLaw) {
    for (double nu : {1.0, -0.5, 0.25}) {
        for (double s : {0.3, -1.2}) {
            for (double t : {2.0, -0.7}) {
                expect_mat2_near(toy_pi(nu, group_exp(s)) * toy_pi(nu, group_exp(t)),
                                 toy_pi(nu, group_exp(s + t)), kTight);
                expect_mat2_near(toy_Pi(nu, group_exp(s)) * toy_Pi(nu, group_exp(t)),
                                 toy_Pi(nu, group_exp(s + t)), 1e-10);
            }
        }
        // delta e^t delta = e^{-t} in both realizations
        const Mat2 d = toy_Pi(nu, group_delta());
        expect_mat2_near(d * toy_Pi(nu, group_exp(1.5)) * d, toy_Pi(nu, group_exp(-1.5)), 1e-10);
    }
}

TEST(ToyConjugation, AlgebraIdentity) {
    for (double nu : {1.0, -0.5, 0.25}) EXPECT_TRUE(toy_conjugation_check(nu));
    EXPECT_THROW(toy_conjugation_check(0.0), SingularAtZero);
}

TEST(ToyConjugation, GroupIdentity) {
    for (double nu : {1.0, -0.5, 0.25}) {
        EXPECT_TRUE(toy_group_conjugation_check(nu, group_delta()));
        for (double t : {0.0, 1.0, -2.0})
            EXPECT_TRUE(toy_group_conjugation_check(nu, group_exp(t))) << nu << " " << t;
    }
    EXPECT_THROW(toy_group_conjugation_check(0.0, group_delta()), SingularAtZero);
}

TEST(ToyConjugation, ExplicitMatrices) {
    expect_mat2_near(toy_S(1.0), {1, 1, 0, -2}, kTight);
    expect_mat2_near(toy_Y(0.5), {0.5, 1, 0, -0.5}, kTight);
    const Mat2 s = toy_S(0.5);
    expect_mat2_near(s * s.inverse(), Mat2::identity(), kTight);
}

TEST(ToyLimits, ReachTheDisplayedMatrices) {
    for (double t : {0.0, 1.0, -2.0}) {
        const ToyLimit limit = toy_Pi_limit(t);
        EXPECT_TRUE(limit.converged) << "t = " << t;
        EXPECT_LE(limit.final_distance, 1e-8);
        expect_mat2_near(limit.exp_limit, {1, t, 0, 1}, kTight);
        expect_mat2_near(limit.delta_limit, {1, 0, 0, -1}, kTight);
    }
}

TEST(ToyLimits, ExpLimitIsAJordanBlockAwayFromZero) {
    // the restriction to the scalings degenerates to a nontrivial unipotent,
    // while pi(0) itself stays diagonal
    const ToyLimit limit = toy_Pi_limit(1.0);
    EXPECT_NE(limit.exp_limit.b, 0.0);
    EXPECT_EQ(limit.exp_limit.a, limit.exp_limit.d);
    const Mat2 at_zero = toy_pi(0.0, group_exp(1.0));
    EXPECT_EQ(at_zero.b, 0.0);
    EXPECT_EQ(at_zero.c, 0.0);
}

TEST(ToyLimits, MiddleEntryIsCancellationSafe) {
    // naive (e^{t nu} - e^{-t nu})/(2 nu) loses ~10 digits at nu = 2^{-40}
    const double t = 1.0;
    const double nu = std::ldexp(1.0, -40);
    const double safe = toy_Pi(nu, group_exp(t)).b;
    EXPECT_NEAR(safe, t + t * t * t * nu * nu / 6.0, 1e-15);
    EXPECT_NEAR(sinhc(0.0), 1.0, 0.0);
    EXPECT_NEAR(sinhc(2.0), std::sinh(2.0) / 2.0, 1e-15);
    EXPECT_NEAR(sinhc(1e-3), 1.0 + 1e-6 / 6.0 + 1e-12 / 120.0, 1e-15);
}

TEST(ToyLimits, InverseGuardsSingularInput) {
    EXPECT_THROW(toy_S(0.0).inverse(), SingularAtZero);
    EXPECT_THROW((Mat2{1, 2, 2, 4}).inverse(), SingularAtZero);
}

} // namespace
} // namespace gkmod
