#include "rootcontract/criterion.hpp"
#include "rootcontract/error.hpp"
#include "rootcontract/oracle.hpp"
#include "rootcontract/parabolic.hpp"

#include <doctest.h>

#include <memory>
#include <set>

using namespace rootcontract;

namespace {

constexpr Kind kKinds[] = {Kind::A, Kind::B, Kind::C, Kind::BC, Kind::D};

ParabolicData of(const GroupInstance& g, int gamma = 0) {
    return parabolic_data(std::make_shared<const RootSystem>(root_system(g)), multiplicities(g), gamma);
}

}  // namespace

TEST_CASE("oracle coefficients") {
    CHECK(oracle::oracle_coefficients(Kind::B, 4, std::vector<int>{1, 1, 0, 0}) == std::vector<int>{1, 2, 2, 2});
    CHECK(oracle::oracle_coefficients(Kind::A, 3, std::vector<int>{0, 1, 0, -1}) == std::vector<int>{0, 1, 1});
    CHECK(oracle::oracle_coefficients(Kind::BC, 3, std::vector<int>{0, 1, 0}) == std::vector<int>{0, 1, 1});
    CHECK_THROWS_AS(oracle::oracle_coefficients(Kind::C, 3, std::vector<int>{1, 0, 0}), NotARoot);
    CHECK_THROWS_AS(oracle::oracle_coefficients(Kind::A, 3, std::vector<int>{1, 1, 0, 0}), NotARoot);
}

TEST_CASE("oracle C_sigma") {
    CHECK(oracle::oracle_c_sigma(Kind::A, 3, 0, 1) == Rat(-2, 3));
    CHECK(oracle::oracle_c_sigma(Kind::B, 3, 0, 2) == -1);
    CHECK(oracle::oracle_c_sigma(Kind::D, 5, 0, 4) == Rat(-1, 2));
    CHECK_THROWS_AS(oracle::oracle_c_sigma(Kind::A, 3, 1, 1), SameRoot);
}

TEST_CASE("oracle and formula path agree") {
    MultiplicityTable unit;
    unit.m = {2, 3, 5, 7, 2};
    for (Kind k : kKinds)
        for (int r = min_rank(k); r <= 10; ++r) {
            auto rs = std::make_shared<const RootSystem>(build_root_system(k, r));
            const auto roots = oracle::enumerate_positive_roots(rs->factors());
            CHECK(roots.size() == rs->positives().size());
            std::set<std::vector<int>> formula;
            for (const auto& p : rs->positives()) {
                formula.insert(p.coords);
                CHECK(oracle::oracle_coefficients(k, r, p.coords) == p.simple_coeffs);
            }
            CHECK(formula == std::set<std::vector<int>>(roots.begin(), roots.end()));
            const auto simple = oracle::simple_roots(rs->factors());
            for (int i = 0; i < r; ++i) CHECK(simple[i] == rs->simple_roots()[i].coords);
            for (int g = 0; g < r; ++g) {
                const auto pd = parabolic_data(rs, Multiplicities{{unit}}, g);
                for (int s = 0; s < r; ++s) {
                    if (s == g) continue;
                    CHECK(c_sigma(pd, s) == oracle::oracle_c_sigma(k, r, g, s));
                    const auto rep = sigma_report(pd, s);
                    const auto tc = oracle::recompute_constants(rs->factors(), pd.mult, g, s);
                    CHECK(tc.Q == pd.Q);
                    CHECK(tc.M == rep.M);
                    CHECK(tc.R == rep.R);
                    CHECK(tc.D == rep.D);
                }
            }
        }
}

TEST_CASE("oracle on products") {
    const std::vector<Factor> f{{Kind::C, 2}, {Kind::A, 2}};
    CHECK(oracle::enumerate_positive_roots(f).size() == 7);
    CHECK(oracle::oracle_c_sigma(f, 0, 2) == 0);
    CHECK(oracle::oracle_c_sigma(f, 0, 1) == Rat(-1, 2));
}

TEST_CASE("scans") {
    const auto sp4 = oracle::oracle_scan(of(GroupInstance::sp(4, FieldKind::NonArchimedean)), 4);
    CHECK(sp4.outcome == oracle::ScanOutcome::FoundStrict);
    CHECK(sp4.value < 0);
    CHECK(log_certificate(of(GroupInstance::sp(4, FieldKind::NonArchimedean)), sp4.t) == sp4.value);

    const auto d4 = of(GroupInstance::form(Family::SOq, 8, 4, FieldKind::NonArchimedean));
    oracle::ScanOptions opts;
    opts.lines = {3, 2};
    const auto res = oracle::oracle_scan(d4, opts);
    CHECK(res.outcome == oracle::ScanOutcome::FoundBoundedOnly);
    CHECK(res.value == 0);

    const auto a1 = oracle::oracle_scan(of(GroupInstance::sl(1, 1, FieldKind::RealLike)), 4);
    CHECK(a1.outcome == oracle::ScanOutcome::None);
}

TEST_CASE("grid values") {
    const auto g = oracle::grid_values(2);
    CHECK(g == std::vector<Rat>{-2, -1, Rat(-1, 2), 0, Rat(1, 2), 1, 2});
    CHECK(oracle::to_string(oracle::ScanOutcome::FoundStrict) == "found_strict");
}
