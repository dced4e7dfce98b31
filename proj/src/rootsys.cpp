#include "rootcontract/rootsys.hpp"

#include "linalg.hpp"
#include "rootcontract/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

namespace rootcontract {

namespace {

struct FactorCoords {
    int ambient_dim{0};
    std::vector<std::vector<int>> simple;
    std::vector<std::vector<int>> positive;
};

std::vector<int> unit(int dim, int i, int value = 1) {
    std::vector<int> v(dim, 0);
    v[i] = value;
    return v;
}

std::vector<int> pair_vec(int dim, int i, int a, int j, int b) {
    std::vector<int> v(dim, 0);
    v[i] = a;
    v[j] = b;
    return v;
}

FactorCoords factor_coords(Kind kind, int r) {
    FactorCoords f;
    f.ambient_dim = kind == Kind::A ? r + 1 : r;
    const int m = f.ambient_dim;

    for (int i = 0; i + 1 < r; ++i) f.simple.push_back(pair_vec(m, i, 1, i + 1, -1));
    switch (kind) {
        case Kind::A: f.simple.push_back(pair_vec(m, r - 1, 1, r, -1)); break;
        case Kind::B:
        case Kind::BC: f.simple.push_back(unit(m, r - 1)); break;
        case Kind::C: f.simple.push_back(unit(m, r - 1, 2)); break;
        case Kind::D: f.simple.push_back(pair_vec(m, r - 2, 1, r - 1, 1)); break;
    }

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            f.positive.push_back(pair_vec(m, i, 1, j, -1));
            if (kind != Kind::A) f.positive.push_back(pair_vec(m, i, 1, j, 1));
        }
    if (kind == Kind::B || kind == Kind::BC)
        for (int i = 0; i < m; ++i) f.positive.push_back(unit(m, i));
    if (kind == Kind::C || kind == Kind::BC)
        for (int i = 0; i < m; ++i) f.positive.push_back(unit(m, i, 2));
    return f;
}

RootClass classify(Kind kind, const std::vector<int>& coords) {
    if (kind == Kind::A) return RootClass::AmbientA;
    int support = 0;
    int first = 0;
    int second = 0;
    for (int c : coords) {
        if (c == 0) continue;
        (support == 0 ? first : second) = c;
        ++support;
    }
    if (support == 2) return second < 0 ? RootClass::EiMinusEj : RootClass::EiPlusEj;
    return first == 2 ? RootClass::TwoEi : RootClass::Ei;
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

void check_rank(Kind kind, int rank) {
    if (rank < min_rank(kind))
        throw InvalidRank(to_string(kind) + " requires rank >= " + std::to_string(min_rank(kind)) +
                          ", got " + std::to_string(rank));
}

}  // namespace

int min_rank(Kind kind) {
    switch (kind) {
        case Kind::A: return 1;
        case Kind::B:
        case Kind::C:
        case Kind::BC: return 2;
        case Kind::D: return 3;
    }
    return 1;
}

std::string to_string(Kind kind) {
    switch (kind) {
        case Kind::A: return "A";
        case Kind::B: return "B";
        case Kind::C: return "C";
        case Kind::BC: return "BC";
        case Kind::D: return "D";
    }
    return "?";
}

std::string to_string(RootClass cls) {
    switch (cls) {
        case RootClass::EiMinusEj: return "e_i-e_j";
        case RootClass::EiPlusEj: return "e_i+e_j";
        case RootClass::Ei: return "e_i";
        case RootClass::TwoEi: return "2e_i";
        case RootClass::AmbientA: return "e_i-e_j(A)";
    }
    return "?";
}

Kind parse_kind(std::string_view text) {
    std::string up(text);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    if (up == "A") return Kind::A;
    if (up == "B") return Kind::B;
    if (up == "C") return Kind::C;
    if (up == "BC") return Kind::BC;
    if (up == "D") return Kind::D;
    throw ValidationError("root system kind must be one of A, B, C, BC, D", std::string(text));
}

int positive_root_count(Kind kind, int r) {
    switch (kind) {
        case Kind::A: return r * (r + 1) / 2;
        case Kind::B:
        case Kind::C: return r * r;
        case Kind::BC: return r * r + r;
        case Kind::D: return r * (r - 1);
    }
    return 0;
}

std::string simple_root_label(int index) { return "tau_" + std::to_string(index + 1); }

std::string RootSystem::name() const {
    std::string out;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (k) out += " x ";
        out += to_string(factors_[k].kind) + "_" + std::to_string(factors_[k].rank);
    }
    return out;
}

RootSystem build_root_system(Kind kind, int rank) {
    const Factor f{kind, rank};
    return RootSystem::assemble(std::span<const Factor>(&f, 1));
}

RootSystem build_product(std::span<const Factor> factors) {
    if (factors.size() < 2) throw InvalidRank("a product needs at least two factors");
    return RootSystem::assemble(factors);
}

RootSystem RootSystem::assemble(std::span<const Factor> factors) {
    if (factors.empty()) throw InvalidRank("a root system needs at least one factor");
    for (const Factor& f : factors) check_rank(f.kind, f.rank);

    RootSystem rs;
    rs.factors_.assign(factors.begin(), factors.end());

    std::vector<FactorCoords> coords;
    std::vector<int> ambient_offset;
    for (const Factor& f : factors) {
        ambient_offset.push_back(rs.ambient_dim_);
        rs.simple_offset_.push_back(rs.rank_);
        coords.push_back(factor_coords(f.kind, f.rank));
        rs.ambient_dim_ += coords.back().ambient_dim;
        rs.rank_ += f.rank;
    }
    for (std::size_t k = 0; k < factors.size(); ++k)
        for (int i = 0; i < factors[k].rank; ++i) rs.factor_of_simple_.push_back(static_cast<int>(k));
    rs.d3_alias_ = std::any_of(factors.begin(), factors.end(),
                               [](const Factor& f) { return f.kind == Kind::D && f.rank == 3; });

    const int r = rs.rank_;
    const int m = rs.ambient_dim_;
    auto embed = [&](std::size_t k, const std::vector<int>& local) {
        std::vector<int> v(m, 0);
        std::copy(local.begin(), local.end(), v.begin() + ambient_offset[k]);
        return v;
    };

    std::vector<std::vector<int>> simple;
    for (std::size_t k = 0; k < factors.size(); ++k)
        for (const auto& s : coords[k].simple) simple.push_back(embed(k, s));

    // Gram matrix, Cartan matrix and the dual basis (G^{-1} S).
    detail::RatMatrix gram(r, std::vector<Rat>(r));
    rs.cartan_.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const int g = dot(simple[i], simple[j]);
            gram[i][j] = Rat(g);
            rs.cartan_[i][j] = 2 * g / dot(simple[j], simple[j]);
        }
    detail::RatMatrix simple_mat(r, std::vector<Rat>(m));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m; ++j) simple_mat[i][j] = Rat(simple[i][j]);
    rs.dual_basis_ = detail::multiply(detail::inverse(gram), simple_mat);

    detail::RatMatrix cartan_rat(r, std::vector<Rat>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) cartan_rat[i][j] = Rat(rs.cartan_[i][j]);
    rs.inverse_cartan_ = detail::inverse(cartan_rat);

    auto expand = [&](const std::vector<int>& v) {
        std::vector<int> n(r);
        for (int s = 0; s < r; ++s) {
            Rat acc(0);
            for (int j = 0; j < m; ++j)
                if (v[j] != 0) acc += rs.dual_basis_[s][j] * Rat(v[j]);
            if (!acc.is_integer()) throw InvariantViolation("non-integral simple coefficient");
            n[s] = static_cast<int>(acc.to_integer());
        }
        return n;
    };

    for (std::size_t k = 0; k < factors.size(); ++k) {
        std::vector<PositiveRoot> local;
        for (const auto& c : coords[k].positive) {
            PositiveRoot root;
            root.coords = embed(k, c);
            root.simple_coeffs = expand(root.coords);
            root.root_class = classify(factors[k].kind, c);
            root.factor_index = static_cast<int>(k);
            local.push_back(std::move(root));
        }
        std::stable_sort(local.begin(), local.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
            const int ha = std::accumulate(a.simple_coeffs.begin(), a.simple_coeffs.end(), 0);
            const int hb = std::accumulate(b.simple_coeffs.begin(), b.simple_coeffs.end(), 0);
            if (ha != hb) return ha < hb;
            return a.simple_coeffs > b.simple_coeffs;
        });
        for (auto& root : local) rs.positives_.push_back(std::move(root));
    }

    for (int i = 0; i < r; ++i) {
        const int k = rs.factor_of_simple_[i];
        PositiveRoot s;
        s.coords = simple[i];
        s.simple_coeffs = expand(simple[i]);
        s.root_class = classify(factors[k].kind,
                                std::vector<int>(simple[i].begin() + ambient_offset[k],
                                                 simple[i].begin() + ambient_offset[k] +
                                                     coords[k].ambient_dim));
        s.factor_index = k;
        rs.simple_roots_.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < rs.positives_.size(); ++i)
        rs.index_by_coords_.emplace(rs.positives_[i].coords, static_cast<int>(i));
    return rs;
}

std::vector<int> coefficients(const RootSystem& rs, std::span<const int> root) {
    std::vector<int> v(root.begin(), root.end());
    if (static_cast<int>(v.size()) != rs.ambient_dim_)
        throw NotARoot("coordinate vector has wrong dimension");
    if (!rs.index_by_coords_.contains(v)) {
        for (int& c : v) c = -c;
        if (!rs.index_by_coords_.contains(v)) throw NotARoot("vector is not a root of " + rs.name());
    }
    std::vector<int> n(rs.rank_);
    for (int s = 0; s < rs.rank_; ++s) {
        Rat acc(0);
        for (int j = 0; j < rs.ambient_dim_; ++j)
            if (root[j] != 0) acc += rs.dual_basis_[s][j] * Rat(root[j]);
        if (!acc.is_integer()) throw InvariantViolation("non-integral simple coefficient");
        n[s] = static_cast<int>(acc.to_integer());
    }
    return n;
}

std::vector<Rat> fundamental_weight_coeffs(const RootSystem& rs, int gamma) {
    if (gamma < 0 || gamma >= rs.rank()) throw InvalidRank("simple root index out of range");
    const int k = rs.factor_of(gamma);
    const int lo = rs.factor_offset(k);
    const int hi = lo + rs.factors()[k].rank;

    // Row gamma of the inverse Cartan matrix; blocks of other factors vanish.
    std::vector<Rat> row(rs.rank(), Rat(0));
    for (int i = lo; i < hi; ++i) row[i] = rs.inverse_cartan()[gamma][i];

    mpz_class lcm = 1;
    for (const Rat& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
    mpz_class g = 0;
    std::vector<mpz_class> ints;
    for (const Rat& x : row) {
        mpz_class v = x.num() * (lcm / x.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (ints[gamma] < 0) g = -g;
    std::vector<Rat> out;
    out.reserve(ints.size());
    for (const mpz_class& v : ints) out.emplace_back(mpq_class(v / g));
    return out;
}

std::vector<PositiveRoot> subsystem_positive(const RootSystem& rs, int excluded) {
    if (excluded < 0 || excluded >= rs.rank()) throw InvalidRank("simple root index out of range");
    std::vector<PositiveRoot> out;
    for (const PositiveRoot& a : rs.positives())
        if (a.simple_coeffs[excluded] == 0) out.push_back(a);
    return out;
}

int max_mark(const RootSystem& rs) {
    int best = 0;
    for (const PositiveRoot& a : rs.positives())
        for (int c : a.simple_coeffs) best = std::max(best, c);
    return best;
}

}  // namespace rootcontract
