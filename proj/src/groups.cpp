#include "rootcontract/groups.hpp"

#include "rootcontract/error.hpp"

#include <algorithm>
#include <cctype>

namespace rootcontract {

namespace {

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

bool is_form_family(Family f) {
    return f == Family::SUh || f == Family::SOq || f == Family::SUht || f == Family::SOqt;
}

void require(bool ok, const std::string& constraint, const std::string& actual) {
    if (!ok) throw ValidationError(constraint, actual);
}

std::string nr(const GroupInstance& g) {
    return "n=" + std::to_string(g.n) + ", r=" + std::to_string(g.rank);
}

}  // namespace

GroupInstance GroupInstance::sl(int rank, int d, FieldKind field) {
    GroupInstance g;
    g.family = Family::SL;
    g.rank = rank;
    g.d = d;
    g.field = field;
    return g;
}

GroupInstance GroupInstance::form(Family family, int n, int rank, FieldKind field) {
    GroupInstance g;
    g.family = family;
    g.n = n;
    g.rank = rank;
    g.field = field;
    return g;
}

GroupInstance GroupInstance::sp(int rank, FieldKind field) {
    GroupInstance g;
    g.family = Family::Sp;
    g.rank = rank;
    g.field = field;
    return g;
}

GroupInstance GroupInstance::complex_simple(Kind kind, int rank) {
    GroupInstance g;
    g.family = Family::ComplexSimple;
    g.complex_kind = kind;
    g.rank = rank;
    g.field = FieldKind::ComplexSplit;
    return g;
}

GroupInstance GroupInstance::product(std::vector<GroupInstance> factors) {
    GroupInstance g;
    g.family = Family::SemisimpleProduct;
    g.rank = 0;
    bool all_nonarch = !factors.empty();
    for (const auto& f : factors) {
        g.rank += f.rank;
        all_nonarch = all_nonarch && f.field == FieldKind::NonArchimedean;
    }
    g.field = all_nonarch ? FieldKind::NonArchimedean : FieldKind::RealLike;
    g.factors = std::move(factors);
    return g;
}

Multiplicities Multiplicities::scaled(int k) const {
    Multiplicities out = *this;
    for (auto& t : out.per_factor)
        for (int& v : t.m) v *= k;
    return out;
}

std::string to_string(Family family) {
    switch (family) {
        case Family::SL: return "SL";
        case Family::SUh: return "SUh";
        case Family::SOq: return "SOq";
        case Family::Sp: return "Sp";
        case Family::SUht: return "SUht";
        case Family::SOqt: return "SOqt";
        case Family::ComplexSimple: return "ComplexSimple";
        case Family::SemisimpleProduct: return "SemisimpleProduct";
    }
    return "?";
}

std::string to_string(FieldKind field) {
    switch (field) {
        case FieldKind::RealLike: return "real";
        case FieldKind::ComplexSplit: return "complex";
        case FieldKind::NonArchimedean: return "nonarch";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    const std::string t = lower(text);
    if (t == "sl") return Family::SL;
    if (t == "suh") return Family::SUh;
    if (t == "soq") return Family::SOq;
    if (t == "sp") return Family::Sp;
    if (t == "suht") return Family::SUht;
    if (t == "soqt") return Family::SOqt;
    throw ValidationError("family must be one of SL, SUh, SOq, Sp, SUht, SOqt", std::string(text));
}

FieldKind parse_field(std::string_view text) {
    const std::string t = lower(text);
    if (t == "real") return FieldKind::RealLike;
    if (t == "complex") return FieldKind::ComplexSplit;
    if (t == "nonarch") return FieldKind::NonArchimedean;
    throw ValidationError("field must be one of real, complex, nonarch", std::string(text));
}

std::optional<std::pair<int, int>> n_window(Family family, int rank, FieldKind field, int unbounded_extra) {
    if (!is_form_family(family) || field == FieldKind::ComplexSplit) return std::nullopt;
    const bool nonarch = field == FieldKind::NonArchimedean;
    int lo = 2 * rank;
    int hi = 2 * rank + unbounded_extra;
    switch (family) {
        case Family::SUh:
            if (nonarch) hi = 2 * rank + 2;
            break;
        case Family::SOq:
            if (nonarch) hi = 2 * rank + 4;
            // n = 2r gives D_r, which needs r >= 3.
            if (rank < 3) lo = 2 * rank + 1;
            break;
        case Family::SUht:
            if (nonarch) hi = 2 * rank + 1;
            break;
        case Family::SOqt:
            hi = nonarch ? 2 * rank + 3 : 2 * rank + 1;
            break;
        default: break;
    }
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

void validate(const GroupInstance& g) {
    const std::string fam = to_string(g.family);
    if (g.family == Family::SemisimpleProduct) {
        require(g.factors.size() >= 2, "a semisimple product needs at least two factors",
                std::to_string(g.factors.size()) + " factor(s)");
        int total = 0;
        bool any_nonarch = false;
        bool any_arch = false;
        for (const auto& f : g.factors) {
            require(f.family != Family::SemisimpleProduct, "product factors must be simple",
                    "nested product");
            validate(f);
            total += f.rank;
            (f.field == FieldKind::NonArchimedean ? any_nonarch : any_arch) = true;
        }
        require(!(any_nonarch && any_arch),
                "product factors must be all non-Archimedean or all Archimedean", "mixed fields");
        require(total == g.rank, "product rank equals the sum of factor ranks",
                "rank=" + std::to_string(g.rank) + ", sum=" + std::to_string(total));
        return;
    }

    if (g.family == Family::ComplexSimple) {
        require(g.field == FieldKind::ComplexSplit, "complex simple groups use the complex field",
                to_string(g.field));
        require(g.complex_kind != Kind::BC, "complex groups have reduced root systems", "BC");
        require(g.rank >= min_rank(g.complex_kind),
                to_string(g.complex_kind) + " requires rank >= " + std::to_string(min_rank(g.complex_kind)),
                "r=" + std::to_string(g.rank));
        return;
    }

    require(g.field != FieldKind::ComplexSplit,
            fam + " is not a complex family; use a complex simple group", "field=complex");
    require(g.rank >= 1, "rank >= 1", "r=" + std::to_string(g.rank));

    if (g.family == Family::SL) {
        require(g.d >= 1, "SL: d >= 1", "d=" + std::to_string(g.d));
        if (g.field == FieldKind::RealLike)
            require(g.d == 1 || g.d == 2, "SL over R: d = 1 or d = 2", "d=" + std::to_string(g.d));
        return;
    }

    require(g.rank >= 2, fam + ": Witt index / rank >= 2", "r=" + std::to_string(g.rank));
    if (g.family == Family::Sp) return;

    const bool nonarch = g.field == FieldKind::NonArchimedean;
    require(g.n >= 2 * g.rank, fam + ": n >= 2r", nr(g));
    switch (g.family) {
        case Family::SUh:
            if (nonarch) require(g.n <= 2 * g.rank + 2, "SUh non-Archimedean: n <= 2r+2", nr(g));
            break;
        case Family::SOq:
            if (nonarch) require(g.n <= 2 * g.rank + 4, "SOq non-Archimedean: n <= 2r+4", nr(g));
            if (g.n == 2 * g.rank)
                require(g.rank >= 3, "SOq with n = 2r: r >= 3 (restricted system D_r)", nr(g));
            break;
        case Family::SUht:
            if (nonarch) require(g.n <= 2 * g.rank + 1, "SUht non-Archimedean: n in {2r, 2r+1}", nr(g));
            break;
        case Family::SOqt:
            if (nonarch)
                require(g.n <= 2 * g.rank + 3, "SOqt non-Archimedean: n <= 2r+3", nr(g));
            else
                require(g.n <= 2 * g.rank + 1, "SOqt over R: n in {2r, 2r+1}", nr(g));
            break;
        default: break;
    }
}

bool is_valid(const GroupInstance& g) {
    try {
        validate(g);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

std::vector<Factor> restricted_system(const GroupInstance& g) {
    const bool split_form = g.n == 2 * g.rank;
    switch (g.family) {
        case Family::SL: return {{Kind::A, g.rank}};
        case Family::Sp: return {{Kind::C, g.rank}};
        case Family::SUh:
        case Family::SUht:
        case Family::SOqt: return {{split_form ? Kind::C : Kind::BC, g.rank}};
        case Family::SOq: return {{split_form ? Kind::D : Kind::B, g.rank}};
        case Family::ComplexSimple: return {{g.complex_kind, g.rank}};
        case Family::SemisimpleProduct: {
            std::vector<Factor> out;
            for (const auto& f : g.factors) {
                auto sub = restricted_system(f);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            return out;
        }
    }
    return {};
}

RootSystem root_system(const GroupInstance& g) {
    const auto factors = restricted_system(g);
    if (factors.size() == 1) return build_root_system(factors[0].kind, factors[0].rank);
    return build_product(factors);
}

Multiplicities multiplicities(const GroupInstance& g) {
    if (g.family == Family::SemisimpleProduct) {
        Multiplicities out;
        for (const auto& f : g.factors) {
            auto sub = multiplicities(f);
            out.per_factor.insert(out.per_factor.end(), sub.per_factor.begin(), sub.per_factor.end());
        }
        return out;
    }

    MultiplicityTable t;
    const int extra = g.n - 2 * g.rank;
    auto set = [&t](int minus, int plus, int short_root, int twice) {
        t[RootClass::EiMinusEj] = minus;
        t[RootClass::EiPlusEj] = plus;
        t[RootClass::Ei] = short_root;
        t[RootClass::TwoEi] = twice;
    };
    switch (g.family) {
        case Family::SL:
            t[RootClass::AmbientA] = g.d * g.d;
            t[RootClass::EiMinusEj] = g.d * g.d;
            break;
        case Family::SUh: set(2, 2, 2 * extra, 1); break;
        case Family::SOq: set(1, 1, extra, 0); break;
        case Family::Sp: set(1, 1, 0, 1); break;
        case Family::SUht: set(4, 4, 4 * extra, 3); break;
        case Family::SOqt: set(4, 4, 4 * extra, 1); break;
        case Family::ComplexSimple:
            switch (g.complex_kind) {
                case Kind::A:
                    t[RootClass::AmbientA] = 2;
                    t[RootClass::EiMinusEj] = 2;
                    break;
                case Kind::B: set(2, 2, 2, 0); break;
                case Kind::C: set(2, 2, 0, 2); break;
                case Kind::D: set(2, 2, 0, 0); break;
                case Kind::BC: set(2, 2, 2, 2); break;
            }
            break;
        case Family::SemisimpleProduct: break;
    }
    return Multiplicities{{t}};
}

std::string describe(const GroupInstance& g) {
    const std::string field = to_string(g.field);
    const std::string r = "r=" + std::to_string(g.rank);
    switch (g.family) {
        case Family::SL: return "SL_{r+1}(D) d=" + std::to_string(g.d) + " " + r + " " + field;
        case Family::SUh: return "SU(h) n=" + std::to_string(g.n) + " " + r + " " + field;
        case Family::SOq: return "SO(q) n=" + std::to_string(g.n) + " " + r + " " + field;
        case Family::Sp: return "Sp_2r " + r + " " + field;
        case Family::SUht: return "SU(h~) n=" + std::to_string(g.n) + " " + r + " " + field;
        case Family::SOqt: return "SO(q~) n=" + std::to_string(g.n) + " " + r + " " + field;
        case Family::ComplexSimple: return "complex " + to_string(g.complex_kind) + "_" + std::to_string(g.rank);
        case Family::SemisimpleProduct: {
            std::string out;
            for (std::size_t i = 0; i < g.factors.size(); ++i) {
                if (i) out += " x ";
                out += "[" + describe(g.factors[i]) + "]";
            }
            return out;
        }
    }
    return "?";
}

}  // namespace rootcontract
