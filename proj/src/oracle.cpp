#include "rootcontract/oracle.hpp"

#include "rootcontract/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>

namespace rootcontract::oracle {

namespace {

using Matrix = std::vector<std::vector<Rat>>;

int local_dim(const Factor& f) { return f.kind == Kind::A ? f.rank + 1 : f.rank; }

std::vector<int> ambient_offsets(std::span<const Factor> factors) {
    std::vector<int> out;
    int acc = 0;
    for (const Factor& f : factors) {
        out.push_back(acc);
        acc += local_dim(f);
    }
    out.push_back(acc);
    return out;
}

void check_factors(std::span<const Factor> factors) {
    if (factors.empty()) throw InvalidRank("no factors");
    for (const Factor& f : factors)
        if (f.rank < min_rank(f.kind)) throw InvalidRank("rank below minimum for " + to_string(f.kind));
}

bool matches_pattern(Kind kind, int support, int a, int b) {
    if (support == 1) {
        switch (kind) {
            case Kind::B: return std::abs(a) == 1;
            case Kind::C: return std::abs(a) == 2;
            case Kind::BC: return std::abs(a) == 1 || std::abs(a) == 2;
            default: return false;
        }
    }
    if (std::abs(a) != 1 || std::abs(b) != 1) return false;
    return kind != Kind::A || a == -b;
}

RootClass pattern_class(Kind kind, const std::vector<int>& local) {
    if (kind == Kind::A) return RootClass::AmbientA;
    std::vector<int> nz;
    for (int c : local)
        if (c != 0) nz.push_back(c);
    if (nz.size() == 1) return nz[0] == 2 ? RootClass::TwoEi : RootClass::Ei;
    return nz[1] < 0 ? RootClass::EiMinusEj : RootClass::EiPlusEj;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col].sign() == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        const Rat inv = Rat(1) / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col].sign() == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rat>> nullspace(Matrix a, std::size_t cols) {
    const auto pivots = row_reduce(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = Rat(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat inner(const std::vector<int>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += Rat(a[i]) * b[i];
    return s;
}

int inner(const std::vector<int>& a, const std::vector<int>& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

std::vector<std::vector<int>> enumerate_positive_roots(std::span<const Factor> factors) {
    check_factors(factors);
    const auto off = ambient_offsets(factors);
    const int total = off.back();
    std::vector<std::vector<int>> out;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const int m = local_dim(factors[k]);
        const Kind kind = factors[k].kind;
        for (int i = 0; i < m; ++i) {
            for (int a = -2; a <= 2; ++a) {
                if (a == 0) continue;
                if (a > 0 && matches_pattern(kind, 1, a, 0)) {
                    std::vector<int> v(total, 0);
                    v[off[k] + i] = a;
                    out.push_back(std::move(v));
                }
                for (int j = i + 1; j < m; ++j)
                    for (int b = -2; b <= 2; ++b) {
                        if (b == 0 || a < 0 || !matches_pattern(kind, 2, a, b)) continue;
                        std::vector<int> v(total, 0);
                        v[off[k] + i] = a;
                        v[off[k] + j] = b;
                        out.push_back(std::move(v));
                    }
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> simple_roots(std::span<const Factor> factors) {
    check_factors(factors);
    const auto off = ambient_offsets(factors);
    const int total = off.back();
    std::vector<std::vector<int>> out;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const int r = factors[k].rank;
        const int o = off[k];
        for (int i = 0; i < r; ++i) {
            std::vector<int> v(total, 0);
            if (i + 1 < r || factors[k].kind == Kind::A) {
                v[o + i] = 1;
                v[o + i + 1] = -1;
            } else if (factors[k].kind == Kind::D) {
                v[o + i - 1] = 1;
                v[o + i] = 1;
            } else {
                v[o + i] = factors[k].kind == Kind::C ? 2 : 1;
            }
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<int> oracle_coefficients(std::span<const Factor> factors, std::span<const int> root) {
    const auto roots = enumerate_positive_roots(factors);
    std::vector<int> v(root.begin(), root.end());
    std::vector<int> neg = v;
    for (int& c : neg) c = -c;
    if (std::find(roots.begin(), roots.end(), v) == roots.end() &&
        std::find(roots.begin(), roots.end(), neg) == roots.end())
        throw NotARoot("not in the enumerated root set");

    const auto simple = simple_roots(factors);
    const std::size_t r = simple.size();
    const std::size_t m = v.size();
    Matrix aug(m, std::vector<Rat>(r + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug[i][j] = Rat(simple[j][i]);
        aug[i][r] = Rat(v[i]);
    }
    const auto pivots = row_reduce(aug, r);
    if (pivots.size() != r) throw InvariantViolation("simple roots are not independent");
    for (std::size_t i = r; i < m; ++i)
        if (aug[i][r].sign() != 0) throw NotARoot("not in the span of the simple roots");
    std::vector<int> n(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (!aug[i][r].is_integer()) throw InvariantViolation("non-integral coefficient");
        n[pivots[i]] = static_cast<int>(aug[i][r].to_integer());
    }
    return n;
}

std::vector<int> oracle_coefficients(Kind kind, int rank, std::span<const int> root) {
    const Factor f{kind, rank};
    return oracle_coefficients(std::span<const Factor>(&f, 1), root);
}

Rat oracle_c_sigma(std::span<const Factor> factors, int gamma, int sigma) {
    const auto simple = simple_roots(factors);
    const int r = static_cast<int>(simple.size());
    if (gamma < 0 || sigma < 0 || gamma >= r || sigma >= r) throw InvalidRank("index out of range");
    if (gamma == sigma) throw SameRoot("gamma == sigma");

    // Coroots tau^vee = 2 tau / (tau, tau), as rational ambient vectors.
    std::vector<std::vector<Rat>> coroots;
    std::vector<int> unknowns;
    for (int j = 0; j < r; ++j) {
        if (j == gamma) continue;
        const Rat scale(2, inner(simple[j], simple[j]));
        std::vector<Rat> c;
        for (int x : simple[j]) c.push_back(Rat(x) * scale);
        coroots.push_back(std::move(c));
        unknowns.push_back(j);
    }

    Matrix eqs;
    for (int t = 0; t < r; ++t) {
        if (t == gamma || t == sigma) continue;
        std::vector<Rat> row;
        for (const auto& c : coroots) row.push_back(inner(simple[t], c));
        eqs.push_back(std::move(row));
    }
    const std::size_t cols = coroots.size();
    std::vector<std::vector<Rat>> basis;
    if (eqs.empty()) {
        basis.push_back(std::vector<Rat>(cols, Rat(1)));
    } else {
        basis = nullspace(eqs, cols);
    }
    if (basis.size() != 1) throw InvariantViolation("cocharacter line is not one-dimensional");

    std::vector<Rat> v(simple[0].size(), Rat(0));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += basis[0][j] * coroots[j][i];
    const Rat at_sigma = inner(simple[sigma], v);
    if (at_sigma.sign() == 0) throw DegenerateDirection("sigma vanishes on the cocharacter line");
    return inner(simple[gamma], v) / at_sigma;
}

Rat oracle_c_sigma(Kind kind, int rank, int gamma, int sigma) {
    const Factor f{kind, rank};
    return oracle_c_sigma(std::span<const Factor>(&f, 1), gamma, sigma);
}

TableConstants recompute_constants(std::span<const Factor> factors, const Multiplicities& mult, int gamma,
                                   int sigma) {
    const auto roots = enumerate_positive_roots(factors);
    const auto off = ambient_offsets(factors);
    TableConstants out;
    std::optional<Rat> best;
    for (const auto& root : roots) {
        const auto n = oracle_coefficients(factors, root);
        std::size_t k = 0;
        while (k + 1 < factors.size() && std::all_of(root.begin() + off[k], root.begin() + off[k + 1],
                                                      [](int c) { return c == 0; }))
            ++k;
        const std::vector<int> local(root.begin() + off[k], root.begin() + off[k + 1]);
        const long long m = mult.per_factor.at(k)[pattern_class(factors[k].kind, local)];
        if (n[gamma] > 0) {
            out.Q += static_cast<long long>(n[gamma]) * m;
            Rat ratio(n[sigma], n[gamma]);
            if (!best || ratio > *best) best = ratio;
        } else if (n[sigma] > 0) {
            out.M += static_cast<long long>(n[sigma]) * m;
        }
    }
    out.R = best.value_or(Rat(0));
    out.C = oracle_c_sigma(factors, gamma, sigma);
    out.D = out.R + out.C;
    return out;
}

std::string to_string(ScanOutcome outcome) {
    switch (outcome) {
        case ScanOutcome::FoundStrict: return "found_strict";
        case ScanOutcome::FoundBoundedOnly: return "found_bounded_only";
        case ScanOutcome::None: return "none";
    }
    return "?";
}

std::vector<Rat> grid_values(int bound) {
    std::set<Rat> values;
    for (int q = 1; q <= bound; ++q)
        for (int p = -bound; p <= bound; ++p) values.insert(Rat(p, q));
    return {values.begin(), values.end()};
}

ScanResult oracle_scan(const ParabolicData& pd, int grid_bound) {
    ScanOptions opts;
    opts.grid_bound = grid_bound;
    return oracle_scan(pd, opts);
}

ScanResult oracle_scan(const ParabolicData& pd, const ScanOptions& options) {
    if (options.grid_bound < 1) throw ValidationError("grid bound >= 1", std::to_string(options.grid_bound));
    const int r = pd.rs->rank();
    const int gamma = pd.gamma;
    std::vector<Rat> nonzero;
    for (const Rat& x : grid_values(options.grid_bound))
        if (x.sign() != 0) nonzero.push_back(x);

    ScanResult result;
    std::optional<std::vector<Rat>> bounded;

    // Returns true to stop the scan.
    auto visit = [&](const std::vector<Rat>& u) {
        std::vector<Rat> t = u;
        Rat acc(0);
        for (int i = 0; i < r; ++i)
            if (i != gamma && u[i].sign() != 0) acc += pd.weight_coeffs[i] * u[i];
        t[gamma] = -acc / pd.weight_coeffs[gamma];
        ++result.directions;
        const Rat e = log_certificate(pd, t);
        if (e.sign() < 0) {
            result.outcome = ScanOutcome::FoundStrict;
            result.t = std::move(t);
            result.value = e;
            return true;
        }
        if (e.sign() == 0 && !bounded) bounded = t;
        return false;
    };

    std::vector<int> free;
    for (int i = 0; i < r; ++i)
        if (i != gamma) free.push_back(i);

    if (!options.lines.empty()) {
        for (int s : options.lines) {
            if (s == gamma || s < 0 || s >= r) throw SameRoot("scan line must use sigma != gamma");
            for (const Rat& x : nonzero) {
                std::vector<Rat> u(r, Rat(0));
                u[s] = x;
                if (visit(u)) return result;
            }
        }
    } else {
        const int max_support = std::min<int>(options.max_support, static_cast<int>(free.size()));
        std::vector<int> chosen;
        std::vector<Rat> u(r, Rat(0));
        // Enumerate supports of size k, then all value assignments on them.
        std::function<bool(std::size_t, int)> assign = [&](std::size_t pos, int k) -> bool {
            if (pos == chosen.size()) return visit(u);
            for (const Rat& x : nonzero) {
                u[chosen[pos]] = x;
                if (assign(pos + 1, k)) return true;
            }
            u[chosen[pos]] = Rat(0);
            return false;
        };
        std::function<bool(std::size_t, int)> choose = [&](std::size_t start, int k) -> bool {
            if (static_cast<int>(chosen.size()) == k) return assign(0, k);
            for (std::size_t i = start; i < free.size(); ++i) {
                chosen.push_back(free[i]);
                const bool stop = choose(i + 1, k);
                chosen.pop_back();
                if (stop) return true;
            }
            return false;
        };
        for (int k = 1; k <= max_support; ++k)
            if (choose(0, k)) return result;
    }

    if (bounded) {
        result.outcome = ScanOutcome::FoundBoundedOnly;
        result.t = *bounded;
        result.value = Rat(0);
    }
    return result;
}

}  // namespace rootcontract::oracle
