#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "gkmod/serialize.hpp"

namespace gkmod {
namespace {

Rat Q(long n, long d = 1) { return Rat(n) / Rat(d); }

FamilySpec spec_of(FamilyKind kind, int eps, NuParameter nu, int window = 12) {
    FamilySpec s;
    s.kind = kind;
    s.epsilon = eps;
    s.nu = std::move(nu);
    s.window = window;
    return s;
}

TEST(ScalarJson, FrozenEncoding) {
    const RadicalScalar half_sqrt5(CRat(Q(1, 2)), Rat(5));
    EXPECT_EQ(scalar_to_json(half_sqrt5).dump(), R"({"c":["1/2","0"],"q":"5"})");

    const RadicalScalar gauss(CRat(Q(2), Q(1)));
    EXPECT_EQ(scalar_to_json(gauss).dump(), R"({"c":["2","1"],"q":"1"})");

    EXPECT_EQ(scalar_to_json(RadicalScalar(0)).dump(), R"({"c":["0","0"],"q":"1"})");
}

TEST(ScalarJson, RoundTripsAndNormalizes) {
    const std::vector<RadicalScalar> values{
        RadicalScalar(0),
        RadicalScalar(Q(-7, 3)),
        RadicalScalar(CRat(Q(1, 2), Q(-3, 4))),
        RadicalScalar::sqrt_of(Q(45, 4)),
        RadicalScalar(CRat(Q(2)), Q(-5)),
        f_coefficient(3, nu_real(Q(7, 2))),
        f_coefficient(2, nu_imag(Q(1))),
    };
    for (const RadicalScalar& s : values)
        EXPECT_TRUE(scalar_from_json(scalar_to_json(s)) == s) << scalar_to_json(s).dump();

    // non-canonical radicand input normalizes on construction
    const RadicalScalar rebuilt = scalar_from_json(Json::parse(R"({"c":["1","0"],"q":"1/2"})"));
    EXPECT_TRUE(rebuilt == RadicalScalar(CRat(Q(1, 2)), Rat(2)));
}

TEST(ScalarJson, RejectsMalformedInput) {
    EXPECT_THROW(scalar_from_json(Json::parse(R"({"c":["1"],"q":"1"})")), std::invalid_argument);
    EXPECT_THROW(scalar_from_json(Json::parse(R"({"q":"1"})")), std::invalid_argument);
    EXPECT_THROW(scalar_from_json(Json::parse(R"(["1","0"])")), std::invalid_argument);
    EXPECT_THROW(scalar_from_json(Json::parse(R"({"c":["x","0"],"q":"1"})")),
                 std::invalid_argument);
}

TEST(NuJson, EncodingAndRoundTrip) {
    EXPECT_EQ(nu_to_json(nu_real(Q(7, 2))).dump(), R"({"re":"7/2","im":"0"})");
    EXPECT_EQ(nu_to_json(nu_imag(Q(3, 4))).dump(), R"({"re":"0","im":"3/4"})");
    EXPECT_EQ(nu_to_json(nu_float({0.5, -1.25})).dump(), R"({"float":[0.5,-1.25]})");

    for (const NuParameter& nu :
         {nu_real(Q(-5, 2)), nu_imag(Q(2)), nu_real(Q(0)), nu_float({0.3, 0.7})})
        EXPECT_TRUE(nu_from_json(nu_to_json(nu)) == nu);

    EXPECT_THROW(nu_from_json(Json::parse(R"({"re":"1","im":"1"})")), std::invalid_argument);
    EXPECT_THROW(nu_from_json(Json::parse(R"({"float":[1.0]})")), std::invalid_argument);
}

TEST(FamilySpecJson, RoundTripAllKinds) {
    const std::vector<FamilySpec> specs{
        spec_of(FamilyKind::Principal, +1, nu_real(Q(3))),
        spec_of(FamilyKind::Deformed, -1, nu_imag(Q(1, 3)), 20),
        spec_of(FamilyKind::Alternate, +1, nu_real(Q(-5, 2)), 8),
    };
    for (const FamilySpec& spec : specs) {
        const FamilySpec back = family_spec_from_json(family_spec_to_json(spec));
        EXPECT_EQ(back.kind, spec.kind);
        EXPECT_EQ(back.epsilon, spec.epsilon);
        EXPECT_TRUE(back.nu == spec.nu);
        EXPECT_EQ(back.window, spec.window);
    }

    FamilySpec custom = spec_of(FamilyKind::PsiDeformed, +1, nu_real(Q(5, 2)), 10);
    custom.psi = canonical_psi();
    const Json j = family_spec_to_json(custom);
    EXPECT_EQ(j["psi"], "canonical");
    const FamilySpec back = family_spec_from_json(j);
    ASSERT_TRUE(back.psi.has_value());
    EXPECT_EQ(back.psi->description, canonical_psi().description);
    EXPECT_TRUE(build_family(back).E == build_family(custom).E);
}

TEST(FamilySpecJson, FrozenEncodingAndValidation) {
    const Json j = family_spec_to_json(spec_of(FamilyKind::Principal, +1, nu_real(Q(3)), 30));
    EXPECT_EQ(j.dump(),
              R"({"kind":"pi","epsilon":1,"nu":{"re":"3","im":"0"},"window":30})");

    EXPECT_THROW(family_kind_from_name("sigma"), std::invalid_argument);
    EXPECT_THROW(psi_handle_by_name("zero"), std::invalid_argument);
    Json bad = j;
    bad["epsilon"] = 2;
    EXPECT_THROW(family_spec_from_json(bad), std::invalid_argument);
}

TEST(OperatorJson, RoundTripAndShape) {
    const ExactTriple t = build_Pi(spec_of(FamilyKind::Deformed, +1, nu_real(Q(7, 2)), 10));
    for (const auto* op : {&t.H, &t.E, &t.F}) {
        const Json j = operator_to_json(*op);
        ASSERT_TRUE(j.is_array());
        int prev_src = -1000;
        for (const Json& entry : j) {
            EXPECT_GT(entry["src"].get<int>(), prev_src);  // ascending source order
            prev_src = entry["src"].get<int>();
            EXPECT_EQ(entry["dst"].get<int>(), prev_src + op->shift());
        }
        EXPECT_TRUE(operator_from_json(j, op->window(), op->shift()) == *op);
    }

    Json mismatched = operator_to_json(t.E);
    mismatched[0]["dst"] = mismatched[0]["dst"].get<int>() + 2;
    EXPECT_THROW(operator_from_json(mismatched, t.E.window(), +2), std::invalid_argument);
}

TEST(SeriesReportJson, FrozenEncoding) {
    FamilySpec spec = spec_of(FamilyKind::Principal, +1, nu_real(Q(3)), 12);
    EXPECT_EQ(series_report_to_json(series_report(spec)).dump(),
              R"x({"factors":["D_{-3}","F_3","D_3"],"bracket":"(D_{-3} ] F_3 [ D_3)",)x"
              R"x("completelyReducible":false,"indecomposable":true})x");

    spec.nu = nu_real(Q(7, 2));
    EXPECT_EQ(series_report_to_json(series_report(spec)).dump(),
              R"x({"factors":["PS"],"bracket":"(PS)","completelyReducible":true,)x"
              R"x("indecomposable":false})x");
}

TEST(ProbeJson, EncodesAllFields) {
    ProbeResult result;
    result.exists = true;
    result.value = {0.0, 2.0};
    result.rate = 0.5;
    const Json j = probe_to_json(3, 3, ProbeDirection::Imaginary, result);
    EXPECT_EQ(j.dump(), R"({"nu0":3,"m":3,"exists":true,"value":[0.0,2.0],"rate":0.5,)"
                        R"("direction":"i"})");
    EXPECT_EQ(probe_direction_name(ProbeDirection::FromAbove), "+");
    EXPECT_EQ(probe_direction_name(ProbeDirection::FromBelow), "-");
}

TEST(FormCsv, FrozenExactTable) {
    const std::string csv = form_to_csv(form_on_pi(+1, nu_real(Q(3)), 8));
    EXPECT_EQ(csv,
              "weight,value,sign\n"
              "-8,0,0\n"
              "-6,0,0\n"
              "-4,0,0\n"
              "-2,-1/2,-1\n"
              "0,1,1\n"
              "2,-1/2,-1\n"
              "4,0,0\n"
              "6,0,0\n"
              "8,0,0\n");
}

TEST(FormCsv, FloatTableUsesShortestDigits) {
    const std::string csv = form_to_csv(form_on_pi_float(+1, {0.5, 0.0}, 6));
    EXPECT_NE(csv.find("weight,value,sign\n"), std::string::npos);
    EXPECT_NE(csv.find("0,1,1\n"), std::string::npos);
    const std::string again = form_to_csv(form_on_pi_float(+1, {0.5, 0.0}, 6));
    EXPECT_EQ(csv, again);
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(-3.0), "-3");
}

} // namespace
} // namespace gkmod
