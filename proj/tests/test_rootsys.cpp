#include "closed_forms.hpp"

#include "rootcontract/error.hpp"
#include "rootcontract/oracle.hpp"
#include "rootcontract/rootsys.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace rootcontract;

namespace {

constexpr Kind kKinds[] = {Kind::A, Kind::B, Kind::C, Kind::BC, Kind::D};

std::vector<int> e(int dim, std::initializer_list<std::pair<int, int>> entries) {
    std::vector<int> v(dim, 0);
    for (auto [i, x] : entries) v[i - 1] = x;
    return v;
}

std::vector<Rat> rats(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("small systems") {
    const RootSystem a2 = build_root_system(Kind::A, 2);
    REQUIRE(a2.positives().size() == 3);
    std::set<std::vector<int>> coeffs;
    for (const auto& p : a2.positives()) coeffs.insert(p.simple_coeffs);
    CHECK(coeffs == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(build_root_system(Kind::B, 4).positives().size() == 16);
    CHECK(build_root_system(Kind::BC, 3).positives().size() == 12);
    CHECK(a2.name() == "A_2");
}

TEST_CASE("minimum ranks") {
    CHECK_THROWS_AS(build_root_system(Kind::A, 0), InvalidRank);
    CHECK_THROWS_AS(build_root_system(Kind::B, 1), InvalidRank);
    CHECK_THROWS_AS(build_root_system(Kind::C, 1), InvalidRank);
    CHECK_THROWS_AS(build_root_system(Kind::BC, 1), InvalidRank);
    CHECK_THROWS_AS(build_root_system(Kind::D, 2), InvalidRank);
    const RootSystem d3 = build_root_system(Kind::D, 3);
    CHECK(d3.d3_alias());
    CHECK_FALSE(build_root_system(Kind::D, 4).d3_alias());
}

TEST_CASE("products") {
    const std::vector<Factor> aaa{{Kind::A, 1}, {Kind::A, 1}, {Kind::A, 1}};
    const RootSystem p = build_product(aaa);
    CHECK(p.positives().size() == 3);
    CHECK(p.rank() == 3);
    const std::vector<Factor> a1a2{{Kind::A, 1}, {Kind::A, 2}};
    const RootSystem q = build_product(a1a2);
    CHECK(q.positives().size() == 4);
    CHECK(q.rank() == 3);
    const std::vector<Factor> b2c2{{Kind::B, 2}, {Kind::C, 2}};
    const RootSystem bc = build_product(b2c2);
    CHECK(bc.positives().size() == 8);
    CHECK(bc.rank() == 4);
    CHECK(bc.name() == "B_2 x C_2");
    // Block-diagonal Cartan matrix.
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (bc.factor_of(i) != bc.factor_of(j)) CHECK(bc.cartan()[i][j] == 0);
    const std::vector<Factor> bad{{Kind::A, 1}, {Kind::D, 2}};
    CHECK_THROWS_AS(build_product(bad), InvalidRank);
    const std::vector<Factor> single{{Kind::A, 2}};
    CHECK_THROWS_AS(build_product(single), InvalidRank);
}

TEST_CASE("coefficients of named roots") {
    CHECK(coefficients(build_root_system(Kind::A, 3), e(4, {{1, 1}, {4, -1}})) == std::vector<int>{1, 1, 1});
    CHECK(coefficients(build_root_system(Kind::B, 4), e(4, {{1, 1}, {2, 1}})) == std::vector<int>{1, 2, 2, 2});
    CHECK(coefficients(build_root_system(Kind::BC, 3), e(3, {{1, 2}})) == std::vector<int>{2, 2, 2});
    CHECK(coefficients(build_root_system(Kind::A, 3), e(4, {{1, -1}, {4, 1}})) == std::vector<int>{-1, -1, -1});
    CHECK_THROWS_AS(coefficients(build_root_system(Kind::A, 3), e(4, {{1, 1}, {2, 1}})), NotARoot);
    CHECK_THROWS_AS(coefficients(build_root_system(Kind::B, 3), e(3, {{1, 2}})), NotARoot);
    CHECK_THROWS_AS(coefficients(build_root_system(Kind::B, 3), std::vector<int>{1, 0}), NotARoot);
}

TEST_CASE("fundamental weight relations") {
    CHECK(fundamental_weight_coeffs(build_root_system(Kind::A, 5), 0) == rats({5, 4, 3, 2, 1}));
    CHECK(fundamental_weight_coeffs(build_root_system(Kind::C, 4), 0) == rats({2, 2, 2, 1}));
    CHECK(fundamental_weight_coeffs(build_root_system(Kind::D, 5), 0) == rats({2, 2, 2, 1, 1}));
    CHECK(fundamental_weight_coeffs(build_root_system(Kind::B, 3), 0) == rats({1, 1, 1}));
    const std::vector<Factor> f{{Kind::A, 1}, {Kind::A, 2}};
    const RootSystem p = build_product(f);
    CHECK(fundamental_weight_coeffs(p, 1) == rats({0, 2, 1}));
    CHECK(fundamental_weight_coeffs(p, 0) == rats({1, 0, 0}));
}

TEST_CASE("subsystems") {
    CHECK(subsystem_positive(build_root_system(Kind::A, 3), 0).size() == 3);
    CHECK(subsystem_positive(build_root_system(Kind::B, 4), 0).size() == 9);
    const std::vector<Factor> f{{Kind::A, 1}, {Kind::A, 2}};
    const auto sub = subsystem_positive(build_product(f), 0);
    CHECK(sub.size() == 3);
    for (const auto& r : sub) CHECK(r.factor_index == 1);
}

TEST_CASE("root counts for ranks up to 12") {
    for (Kind k : kKinds)
        for (int r = min_rank(k); r <= 12; ++r) {
            CAPTURE(to_string(k));
            CAPTURE(r);
            const RootSystem rs = build_root_system(k, r);
            CHECK(static_cast<int>(rs.positives().size()) == testsupport::root_count(k, r));
            CHECK(positive_root_count(k, r) == testsupport::root_count(k, r));
        }
}

TEST_CASE("structural invariants") {
    for (Kind k : kKinds)
        for (int r = min_rank(k); r <= 10; ++r) {
            CAPTURE(to_string(k));
            CAPTURE(r);
            const RootSystem rs = build_root_system(k, r);
            std::set<std::vector<int>> seen;
            for (const auto& p : rs.positives()) {
                // Round trip and consistency of the stored expansion.
                CHECK(coefficients(rs, p.coords) == p.simple_coeffs);
                std::vector<int> sum(rs.ambient_dim(), 0);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < rs.ambient_dim(); ++j)
                        sum[j] += p.simple_coeffs[i] * rs.simple_roots()[i].coords[j];
                CHECK(sum == p.coords);
                CHECK(std::any_of(p.simple_coeffs.begin(), p.simple_coeffs.end(), [](int x) { return x > 0; }));
                CHECK(seen.insert(p.simple_coeffs).second);
                const int nonzero = std::count_if(p.coords.begin(), p.coords.end(), [](int x) { return x != 0; });
                const bool twice = nonzero == 1 && *std::max_element(p.coords.begin(), p.coords.end()) == 2;
                CHECK(twice == (p.root_class == RootClass::TwoEi));
            }
            for (int i = 0; i < r; ++i) {
                CHECK(rs.cartan()[i][i] == 2);
                for (int j = 0; j < r; ++j) {
                    const int a = rs.cartan()[i][j];
                    if (i != j) CHECK((a == 0 || a == -1 || a == -2 || a == -3));
                    CHECK((a == 0) == (rs.cartan()[j][i] == 0));
                }
            }
            // Inverse Cartan really is the inverse.
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    Rat s = 0;
                    for (int l = 0; l < r; ++l) s = s + Rat(rs.cartan()[i][l]) * rs.inverse_cartan()[l][j];
                    CHECK(s == Rat(i == j ? 1 : 0));
                }
        }
}

TEST_CASE("fundamental weight defining equations") {
    for (Kind k : kKinds)
        for (int r = min_rank(k); r <= 12; ++r) {
            const RootSystem rs = build_root_system(k, r);
            for (int g = 0; g < r; ++g) {
                CAPTURE(rs.name());
                CAPTURE(g);
                const auto c = fundamental_weight_coeffs(rs, g);
                mpz_class content = 0;
                for (const auto& x : c) {
                    CHECK(x.is_integer());
                    content = gcd(content, x.num());
                }
                CHECK(content == 1);
                CHECK(c[g] > 0);
                for (int s = 0; s < r; ++s) {
                    Rat sum = 0;
                    for (int i = 0; i < r; ++i) sum = sum + c[i] * Rat(rs.cartan()[i][s]);
                    if (s == g) CHECK(sum > 0);
                    else CHECK(sum == 0);
                }
            }
        }
}

TEST_CASE("product weights stay inside the factor") {
    const std::vector<Factor> f{{Kind::B, 3}, {Kind::A, 2}, {Kind::D, 4}};
    const RootSystem rs = build_product(f);
    for (int g = 0; g < rs.rank(); ++g) {
        const auto c = fundamental_weight_coeffs(rs, g);
        for (int i = 0; i < rs.rank(); ++i)
            if (rs.factor_of(i) != rs.factor_of(g)) CHECK(c[i] == 0);
    }
}

TEST_CASE("highest marks") {
    for (int r = 1; r <= 12; ++r) CHECK(max_mark(build_root_system(Kind::A, r)) == 1);
    for (int r = 2; r <= 12; ++r) {
        CHECK(max_mark(build_root_system(Kind::B, r)) == 2);
        CHECK(max_mark(build_root_system(Kind::C, r)) == 2);
        CHECK(max_mark(build_root_system(Kind::BC, r)) == 2);
    }
    // D_3 is A_3; from D_4 on the highest root e_1 + e_2 has mark 2 at tau_2.
    CHECK(max_mark(build_root_system(Kind::D, 3)) == 1);
    for (int r = 4; r <= 12; ++r) CHECK(max_mark(build_root_system(Kind::D, r)) == 2);
}

TEST_CASE("kind parsing and labels") {
    CHECK(parse_kind("bc") == Kind::BC);
    CHECK(parse_kind("D") == Kind::D);
    CHECK_THROWS_AS(parse_kind("E"), ValidationError);
    CHECK(simple_root_label(2) == "tau_3");
    CHECK(to_string(RootClass::TwoEi) == "2e_i");
}
