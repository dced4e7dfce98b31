#include "closed_forms.hpp"

#include "rootcontract/error.hpp"
#include "rootcontract/groups.hpp"
#include "rootcontract/parabolic.hpp"

#include <doctest.h>

#include <memory>

using namespace rootcontract;

namespace {

constexpr Kind kKinds[] = {Kind::A, Kind::B, Kind::C, Kind::BC, Kind::D};

ParabolicData of(const GroupInstance& g, int gamma = 0) {
    return parabolic_data(std::make_shared<const RootSystem>(root_system(g)), multiplicities(g), gamma);
}

// Multiplicities that differ per class, to catch class mix-ups.
Multiplicities uneven() {
    MultiplicityTable t;
    t.m = {3, 5, 7, 2, 3};
    return Multiplicities{{t}};
}

}  // namespace

TEST_CASE("Q for the first simple root") {
    for (int r = 1; r <= 8; ++r) CHECK(of(GroupInstance::sl(r, 1, FieldKind::RealLike)).Q == r);
    for (int n = 9; n <= 12; ++n)
        CHECK(of(GroupInstance::form(Family::SOq, n, 4, FieldKind::RealLike)).Q == n - 2);
    for (int n = 8; n <= 12; ++n)
        CHECK(of(GroupInstance::form(Family::SUht, n, 4, FieldKind::RealLike)).Q == 4 * n - 2);
}

TEST_CASE("C_sigma examples") {
    for (int r = 2; r <= 10; ++r) {
        auto pd = of(GroupInstance::sl(r, 1, FieldKind::RealLike));
        CHECK(c_sigma(pd, 1) == Rat(-(r - 1), r));
        auto cp = of(GroupInstance::sp(r, FieldKind::RealLike));
        CHECK(c_sigma(cp, r - 1) == Rat(-1, 2));
    }
    auto g = GroupInstance::product({GroupInstance::sl(1, 1, FieldKind::RealLike), GroupInstance::sl(2, 1, FieldKind::RealLike)});
    auto pd = of(g, 0);
    CHECK(c_sigma(pd, 1) == 0);
    CHECK(c_sigma(pd, 2) == 0);
    CHECK_THROWS_AS(c_sigma(pd, 0), SameRoot);
    CHECK_THROWS_AS(sigma_report(pd, 0), SameRoot);
    CHECK_THROWS_AS(max_ratio(pd, 0), SameRoot);
}

TEST_CASE("max ratio examples") {
    for (int r = 2; r <= 8; ++r) CHECK(max_ratio(of(GroupInstance::form(Family::SOq, 2 * r + 1, r, FieldKind::RealLike)), r - 1) == 2);
    for (int r = 3; r <= 8; ++r) CHECK(max_ratio(of(GroupInstance::form(Family::SOq, 2 * r, r, FieldKind::RealLike)), r - 1) == 1);
    auto g = GroupInstance::product({GroupInstance::sl(2, 1, FieldKind::RealLike), GroupInstance::sp(2, FieldKind::RealLike)});
    auto pd = of(g, 0);
    CHECK(max_ratio(pd, 2) == 0);
    CHECK(max_ratio(pd, 3) == 0);
}

TEST_CASE("sigma reports") {
    const auto sp = sigma_report(of(GroupInstance::sp(5, FieldKind::NonArchimedean)), 3);
    CHECK(sp.M == 18);
    CHECK(sp.D == 1);
    CHECK(sp.relation == Relation::StrictlyContracting);

    const auto pd = of(GroupInstance::sl(3, 1, FieldKind::NonArchimedean));
    CHECK(pd.Q == 3);
    const auto s2 = sigma_report(pd, 2);
    CHECK(s2.M == 2);
    CHECK(s2.D == Rat(2, 3));
    CHECK(s2.relation == Relation::Bounded);
    CHECK(sigma_report(pd, 1).relation == Relation::StrictlyContracting);

    const auto d4 = of(GroupInstance::form(Family::SOq, 8, 4, FieldKind::NonArchimedean));
    const auto s = sigma_report(d4, 3);
    CHECK(d4.Q == 6);
    CHECK(s.M == 3);
    CHECK(s.D == Rat(1, 2));
    CHECK(s.relation == Relation::Bounded);
    CHECK(s.D == s.R + s.C);
}

TEST_CASE("parabolic partition and Q") {
    for (Kind k : kKinds)
        for (int r = min_rank(k); r <= 8; ++r) {
            auto rs = std::make_shared<const RootSystem>(build_root_system(k, r));
            for (int g = 0; g < r; ++g) {
                const auto pd = parabolic_data(rs, uneven(), g);
                CHECK(pd.contracted.size() + pd.levi_pos.size() == rs->positives().size());
                long long q = 0;
                for (const auto& a : pd.contracted) {
                    CHECK(a.simple_coeffs[g] > 0);
                    q += a.simple_coeffs[g] * pd.mult.of(a);
                }
                for (const auto& a : pd.levi_pos) CHECK(a.simple_coeffs[g] == 0);
                CHECK(pd.Q == q);
                CHECK(pd.weight_coeffs[g] > 0);
            }
        }
}

TEST_CASE("certificate at the coweight direction equals -M + Q D") {
    for (Kind k : kKinds)
        for (int r = min_rank(k); r <= 10; ++r) {
            auto rs = std::make_shared<const RootSystem>(build_root_system(k, r));
            for (int g = 0; g < r; ++g) {
                const auto pd = parabolic_data(rs, uneven(), g);
                for (int s = 0; s < r; ++s) {
                    if (s == g) continue;
                    const auto rep = sigma_report(pd, s);
                    const Rat e = log_certificate(pd, coweight_direction(pd, s));
                    CAPTURE(rs->name());
                    CAPTURE(g);
                    CAPTURE(s);
                    CHECK(e == Rat(-rep.M) + Rat(pd.Q) * rep.D);
                    CHECK((rep.relation == Relation::StrictlyContracting) == (e < 0));
                    CHECK((rep.relation == Relation::Bounded) == (e == 0));
                    CHECK(rep.R <= max_mark(*rs));
                }
            }
        }
}

TEST_CASE("certificate edge cases") {
    const auto pd = of(GroupInstance::sl(3, 1, FieldKind::NonArchimedean));
    CHECK(log_certificate(pd, std::vector<Rat>(3, 0)) == 0);
    // t_2 = 1, t_3 = 0, t_1 from 3 t_1 + 2 t_2 + t_3 = 0.
    CHECK(log_certificate(pd, std::vector<Rat>{Rat(-2, 3), 1, 0}) < 0);
    CHECK_THROWS_AS(log_certificate(pd, std::vector<Rat>{1, 0, 0}), ConstraintViolated);
    CHECK_THROWS_AS(log_certificate(pd, std::vector<Rat>{0, 0}), ConstraintViolated);

    const auto d4 = of(GroupInstance::form(Family::SOq, 8, 4, FieldKind::NonArchimedean));
    auto t = coweight_direction(d4, 3);
    const Rat plus = log_certificate(d4, t);
    for (auto& x : t) x = -x;
    CHECK(std::min(plus, log_certificate(d4, t)) == 0);
}

TEST_CASE("cross-factor sigmas have D = 0") {
    auto g = GroupInstance::product({GroupInstance::form(Family::SOq, 7, 3, FieldKind::RealLike),
                                     GroupInstance::sl(2, 2, FieldKind::RealLike)});
    auto rs = std::make_shared<const RootSystem>(root_system(g));
    const auto m = multiplicities(g);
    for (int gamma = 0; gamma < rs->rank(); ++gamma) {
        const auto pd = parabolic_data(rs, m, gamma);
        for (int s = 0; s < rs->rank(); ++s) {
            if (rs->factor_of(s) == rs->factor_of(gamma)) continue;
            const auto rep = sigma_report(pd, s);
            CHECK(rep.C == 0);
            CHECK(rep.R == 0);
            CHECK(rep.D == 0);
            CHECK(rep.M > 0);
            CHECK(rep.relation == Relation::StrictlyContracting);
        }
    }
}

TEST_CASE("canonical constants per kind") {
    MultiplicityTable unit;
    unit.m.fill(1);
    for (Kind k : kKinds)
        for (int r = std::max(3, min_rank(k)); r <= 12; ++r) {
            auto rs = std::make_shared<const RootSystem>(build_root_system(k, r));
            const auto pd = parabolic_data(rs, Multiplicities{{unit}}, 0);
            const int s1 = k == Kind::A ? 1 : r - 1;
            const int s2 = k == Kind::A ? 2 : r - 2;
            const auto want = testsupport::table1_closed(k, r);
            CAPTURE(rs->name());
            CHECK(c_sigma(pd, s1) == want.C1);
            CHECK(max_ratio(pd, s1) == want.R1);
            CHECK(sigma_report(pd, s1).D == want.D1);
            CHECK(c_sigma(pd, s2) == want.C2);
            CHECK(max_ratio(pd, s2) == want.R2);
            CHECK(sigma_report(pd, s2).D == want.D2);
        }
}

TEST_CASE("relation names") {
    CHECK(to_string(Relation::StrictlyContracting) == "strict");
    CHECK(to_string(Relation::Bounded) == "bounded");
    CHECK(to_string(Relation::Fails) == "fails");
}
