#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "gkmod/structure.hpp"

using namespace gkmod;

namespace {

Rat Q(long n, long d = 1) { return Rat(Int(n)) / Rat(Int(d)); }

FamilySpec spec_of(FamilyKind kind, int eps, NuParameter nu, int window = 20) {
    FamilySpec s;
    s.kind = kind;
    s.epsilon = eps;
    s.nu = std::move(nu);
    s.window = window;
    return s;
}

const std::vector<NuParameter> kExactGrid = {
    nu_real(0L),      nu_real(1L),      nu_real(-1L),     nu_real(2L),
    nu_real(-2L),     nu_real(3L),      nu_real(-3L),     nu_real(4L),
    nu_real(-4L),     nu_real(Q(7, 2)), nu_real(Q(-5, 2)), nu_imag(Q(1)),
    nu_imag(Q(2)),    nu_imag(Q(1, 3)),
};

const std::vector<FamilyKind> kThreeFamilies = {FamilyKind::Principal, FamilyKind::Deformed,
                                                FamilyKind::Alternate};

std::vector<std::string> factor_strings(const SeriesReport& rep) {
    std::vector<std::string> out;
    for (const auto& f : rep.factors) out.push_back(f.str());
    return out;
}

std::vector<std::string> sorted_factor_strings(const SeriesReport& rep) {
    auto out = factor_strings(rep);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Brackets, HoldExactlyForAllFamilies) {
    for (const auto& nu : kExactGrid) {
        for (int eps : {+1, -1}) {
            for (FamilyKind kind : kThreeFamilies) {
                const ExactTriple t = build_family(spec_of(kind, eps, nu));
                EXPECT_TRUE(verify_brackets(t))
                    << family_kind_token(kind) << " eps=" << eps << " nu=" << format_nu(nu);
            }
        }
    }
}

TEST(Brackets, HoldForCanonicalPsiDeformation) {
    for (const auto& nu : {nu_real(Q(1, 2)), nu_real(Q(7, 2)), nu_imag(Q(2))}) {
        FamilySpec s = spec_of(FamilyKind::PsiDeformed, -1, nu);
        s.psi = canonical_psi();
        EXPECT_TRUE(verify_brackets(build_family(s))) << format_nu(nu);
    }
}

TEST(Brackets, CorruptedEntryFails) {
    ExactTriple t = build_pi(spec_of(FamilyKind::Principal, +1, nu_real(3L)));
    t.E.set(0, t.E.at(0) + t.E.at(0));
    EXPECT_FALSE(verify_brackets(t));

    // a corruption that breaks radical compatibility is caught, not propagated
    ExactTriple u = build_Pi(spec_of(FamilyKind::Deformed, +1, nu_real(Q(7, 2))));
    u.E.set(0, RadicalScalar::sqrt_of(Q(3)));
    EXPECT_FALSE(verify_brackets(u));
}

TEST(Brackets, ApproxHoldsForFloatParameters) {
    const FamilySpec s = spec_of(FamilyKind::Deformed, +1, nu_float({0.5, 0.25}));
    const FloatTriple t = build_family_float(s);
    EXPECT_TRUE(verify_brackets_approx(t, 1e-12));

    FloatTriple bad = t;
    bad.E.set(0, bad.E.at(0) + 1.0);
    EXPECT_FALSE(verify_brackets_approx(bad, 1e-12));
}

TEST(Casimir, KnownScalars) {
    EXPECT_EQ(*casimir_scalar(build_pi(spec_of(FamilyKind::Principal, +1, nu_real(3L)))),
              RadicalScalar(8));
    EXPECT_EQ(*casimir_scalar(build_Pi(spec_of(FamilyKind::Deformed, -1, nu_imag(Q(1))))),
              RadicalScalar(-2));
    EXPECT_EQ(*casimir_scalar(build_pi(spec_of(FamilyKind::Principal, +1, nu_real(0L)))),
              RadicalScalar(-1));
    EXPECT_EQ(
        *casimir_scalar(build_pi_prime(spec_of(FamilyKind::Alternate, +1, nu_real(Q(7, 2))))),
        RadicalScalar(Q(45, 4)));
}

TEST(Casimir, EqualsNuSquaredMinusOneEverywhere) {
    for (const auto& nu : kExactGrid) {
        const RadicalScalar want{CRat(nu_squared_minus_one(nu))};
        for (int eps : {+1, -1}) {
            for (FamilyKind kind : kThreeFamilies) {
                const auto got = casimir_scalar(build_family(spec_of(kind, eps, nu)));
                ASSERT_TRUE(got.has_value());
                EXPECT_EQ(*got, want)
                    << family_kind_token(kind) << " eps=" << eps << " nu=" << format_nu(nu);
            }
        }
    }
}

TEST(Casimir, MismatchWhenNotScalar) {
    ExactTriple t = build_pi(spec_of(FamilyKind::Principal, +1, nu_real(3L)));
    t.E.set(0, t.E.at(0) + RadicalScalar(1));
    EXPECT_FALSE(casimir_scalar(t).has_value());
}

TEST(Casimir, ApproxMatchesFloatParameter) {
    const FloatTriple t = build_family_float(spec_of(FamilyKind::Deformed, +1, nu_float({0.5, 0.25})));
    const auto got = casimir_scalar_approx(t, 1e-9);
    ASSERT_TRUE(got.has_value());
    const std::complex<double> nu{0.5, 0.25};
    EXPECT_NEAR(std::abs(*got - (nu * nu - 1.0)), 0.0, 1e-12);
}

TEST(Annihilation, KnownPatterns) {
    {
        const ExactTriple t = build_pi(spec_of(FamilyKind::Principal, +1, nu_real(3L)));
        const AnnihilationPattern p = annihilation_pattern(t.E, t.F);
        EXPECT_EQ(p.e_zeros, (std::set<int>{-4}));
        EXPECT_EQ(p.f_zeros, (std::set<int>{4}));
    }
    {
        const ExactTriple t = build_Pi(spec_of(FamilyKind::Deformed, +1, nu_real(3L)));
        const AnnihilationPattern p = annihilation_pattern(t.E, t.F);
        EXPECT_EQ(p.e_zeros, (std::set<int>{-4, 2}));
        EXPECT_EQ(p.f_zeros, (std::set<int>{4, -2}));
    }
    {
        const ExactTriple t = build_pi(spec_of(FamilyKind::Principal, -1, nu_real(0L)));
        const AnnihilationPattern p = annihilation_pattern(t.E, t.F);
        EXPECT_EQ(p.e_zeros, (std::set<int>{-1}));
        EXPECT_EQ(p.f_zeros, (std::set<int>{1}));
    }
    {
        const ExactTriple t = build_pi(spec_of(FamilyKind::Principal, +1, nu_real(Q(7, 2))));
        const AnnihilationPattern p = annihilation_pattern(t.E, t.F);
        EXPECT_TRUE(p.e_zeros.empty());
        EXPECT_TRUE(p.f_zeros.empty());
    }
}

TEST(Series, PrincipalAtPositiveInteger) {
    const SeriesReport rep = series_report(spec_of(FamilyKind::Principal, +1, nu_real(3L)));
    EXPECT_EQ(rep.bracket, "(D_{-3} ] F_3 [ D_3)");
    EXPECT_EQ(factor_strings(rep), (std::vector<std::string>{"D_{-3}", "F_3", "D_3"}));
    EXPECT_TRUE(rep.reducible);
    EXPECT_TRUE(rep.indecomposable);
    EXPECT_FALSE(rep.completely_reducible);
    ASSERT_EQ(rep.segments.size(), 3u);
    EXPECT_TRUE(rep.segments[0].is_submodule);   // D_{-3} tail
    EXPECT_FALSE(rep.segments[1].is_submodule);  // F_3 is only a quotient
    EXPECT_TRUE(rep.segments[2].is_submodule);   // D_3 tail
    EXPECT_EQ(rep.segments[1].support, (std::vector<int>{-2, 0, 2}));
    EXPECT_TRUE(rep.segments[0].lower_open);
    EXPECT_TRUE(rep.segments[2].upper_open);
}

TEST(Series, PrincipalAtNegativeInteger) {
    const SeriesReport rep = series_report(spec_of(FamilyKind::Principal, +1, nu_real(-3L)));
    EXPECT_EQ(rep.bracket, "(D_{-3} [ F_3 ] D_3)");
    EXPECT_TRUE(rep.indecomposable);
    ASSERT_EQ(rep.segments.size(), 3u);
    // the finite factor is now the unique irreducible submodule
    EXPECT_FALSE(rep.segments[0].is_submodule);
    EXPECT_TRUE(rep.segments[1].is_submodule);
    EXPECT_FALSE(rep.segments[2].is_submodule);
}

TEST(Series, LimitsSplitAtZero) {
    for (FamilyKind kind : kThreeFamilies) {
        const SeriesReport rep = series_report(spec_of(kind, -1, nu_real(0L)));
        EXPECT_EQ(rep.bracket, "(L^- ] [ L^+)") << family_kind_token(kind);
        EXPECT_EQ(factor_strings(rep), (std::vector<std::string>{"L^-", "L^+"}));
        EXPECT_TRUE(rep.completely_reducible);
        EXPECT_FALSE(rep.indecomposable);
        EXPECT_TRUE(rep.segments[0].is_submodule);
        EXPECT_TRUE(rep.segments[1].is_submodule);
    }
}

TEST(Series, DeformedSplitsEverywhere) {
    const SeriesReport rep = series_report(spec_of(FamilyKind::Deformed, +1, nu_real(3L)));
    EXPECT_EQ(rep.bracket, "(D_{-3} ] [ F_3 ] [ D_3)");
    EXPECT_TRUE(rep.completely_reducible);
    EXPECT_FALSE(rep.indecomposable);
    for (const auto& s : rep.segments) EXPECT_TRUE(s.is_submodule);
}

TEST(Series, AlternateWallsLeanOneWay) {
    EXPECT_EQ(series_report(spec_of(FamilyKind::Alternate, +1, nu_real(3L))).bracket,
              "(D_{-3} ] F_3 ] D_3)");
    EXPECT_EQ(series_report(spec_of(FamilyKind::Alternate, +1, nu_real(-3L))).bracket,
              "(D_{-3} [ F_3 [ D_3)");
    const SeriesReport rep = series_report(spec_of(FamilyKind::Alternate, -1, nu_real(4L)));
    EXPECT_EQ(rep.bracket, "(D_{-4} ] F_4 ] D_4)");
    EXPECT_TRUE(rep.indecomposable);
    // D_{-4} and F_4 stack into the maximal proper submodule; D_4 is the quotient
    EXPECT_TRUE(rep.segments[0].is_submodule);
    EXPECT_FALSE(rep.segments[1].is_submodule);
    EXPECT_FALSE(rep.segments[2].is_submodule);
}

TEST(Series, IrreduciblePoints) {
    for (const auto& nu : {nu_real(Q(7, 2)), nu_real(2L), nu_imag(Q(1))}) {
        const SeriesReport rep = series_report(spec_of(FamilyKind::Principal, +1, nu));
        EXPECT_EQ(rep.bracket, "(PS)") << format_nu(nu);
        EXPECT_EQ(factor_strings(rep), (std::vector<std::string>{"PS"}));
        EXPECT_FALSE(rep.reducible);
        EXPECT_FALSE(rep.indecomposable);
        EXPECT_TRUE(rep.completely_reducible);
    }
}

TEST(Series, ReducibilityDichotomyOverGrid) {
    for (const auto& nu : kExactGrid) {
        for (int eps : {+1, -1}) {
            const bool expect_reducible = is_reducibility_point(nu, eps);
            std::vector<std::vector<std::string>> multisets;
            for (FamilyKind kind : kThreeFamilies) {
                const SeriesReport rep = series_report(spec_of(kind, eps, nu));
                EXPECT_EQ(rep.reducible, expect_reducible)
                    << family_kind_token(kind) << " eps=" << eps << " nu=" << format_nu(nu);
                multisets.push_back(sorted_factor_strings(rep));
                if (kind == FamilyKind::Deformed) EXPECT_TRUE(rep.completely_reducible);
                if (kind == FamilyKind::Principal && expect_reducible) {
                    const bool is_minus_one_zero =
                        eps == -1 && *reducibility_integer(nu, eps) == 0;
                    EXPECT_EQ(rep.completely_reducible, is_minus_one_zero)
                        << "eps=" << eps << " nu=" << format_nu(nu);
                }
            }
            EXPECT_EQ(multisets[0], multisets[1]) << format_nu(nu) << " eps=" << eps;
            EXPECT_EQ(multisets[0], multisets[2]) << format_nu(nu) << " eps=" << eps;
        }
    }
}

TEST(Series, WindowMustResolveTheWalls) {
    EXPECT_THROW(series_report(spec_of(FamilyKind::Principal, +1, nu_real(9L), 12)),
                 WindowTooSmall);
    const SeriesReport rep = series_report(spec_of(FamilyKind::Principal, +1, nu_real(9L), 13));
    EXPECT_EQ(rep.bracket, "(D_{-9} ] F_9 [ D_9)");
    // irreducible parameters need no slack
    EXPECT_EQ(series_report(spec_of(FamilyKind::Principal, +1, nu_real(Q(7, 2)), 6)).bracket,
              "(PS)");
}
