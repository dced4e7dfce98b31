#include "rootcontract/commands.hpp"

#include "rootcontract/criterion.hpp"
#include "rootcontract/error.hpp"
#include "rootcontract/oracle.hpp"
#include "rootcontract/parabolic.hpp"
#include "rootcontract/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <map>
#include <memory>
#include <regex>

namespace rootcontract {

namespace {

constexpr const char* kFormula = "formula";
constexpr const char* kBoth = "both-agree";

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    return out;
}

std::optional<Kind> as_kind(std::string_view s) {
    const std::string u = upper(s);
    if (u == "A" || u == "B" || u == "C" || u == "BC" || u == "D") return parse_kind(u);
    return std::nullopt;
}

int require_rank(const InstanceArgs& args) {
    if (!args.rank) throw ValidationError("--rank is required", "missing");
    return *args.rank;
}

template <typename T>
std::string tuple_text(const std::vector<T>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        if constexpr (std::is_same_v<T, Rat>) out += v[i].str();
        else out += std::to_string(v[i]);
    }
    return out + ")";
}

Multiplicities unit_multiplicities(std::size_t factors) {
    MultiplicityTable t;
    t.m.fill(1);
    return Multiplicities{std::vector<MultiplicityTable>(factors, t)};
}

void agree(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation("formula and oracle disagree on " + what);
}

void kv(Report& r, const std::string& key, Cell value, const char* provenance = nullptr) {
    r.add_row().add("key", key).add("value", std::move(value));
    if (provenance) r.set_provenance(key, provenance);
}

std::string label(int index) { return simple_root_label(index); }

void echo_inputs(Report& r, const InstanceArgs& args) {
    if (args.family) r.inputs.emplace_back("family", *args.family);
    if (args.kind) r.inputs.emplace_back("kind", *args.kind);
    if (args.rank) r.inputs.emplace_back("rank", std::to_string(*args.rank));
    if (args.n) r.inputs.emplace_back("n", std::to_string(*args.n));
    if (args.d) r.inputs.emplace_back("d", std::to_string(*args.d));
    r.inputs.emplace_back("field", args.field);
}

// Cross-checks C, R, D, Q and M of one sigma against the oracle.
void check_sigma(const ParabolicData& pd, const SigmaReport& rep) {
    const auto& factors = pd.rs->factors();
    const auto oc = oracle::oracle_c_sigma(factors, pd.gamma, rep.sigma);
    const auto tc = oracle::recompute_constants(factors, pd.mult, pd.gamma, rep.sigma);
    const std::string s = label(rep.sigma);
    agree(oc == rep.C && tc.C == rep.C, "C at " + s);
    agree(tc.R == rep.R, "R at " + s);
    agree(tc.D == rep.D, "D at " + s);
    agree(tc.M == rep.M, "M at " + s);
    agree(tc.Q == pd.Q, "Q_gamma");
}

void sigma_rows(Report& r, const std::string& suffix, const SigmaReport& rep, const char* prov) {
    kv(r, "sigma" + suffix, label(rep.sigma));
    kv(r, "C_sigma" + suffix, rep.C, prov);
    kv(r, "R_sigma" + suffix, rep.R, prov);
    kv(r, "D_sigma" + suffix, rep.D, prov);
    kv(r, "M_sigma" + suffix, rep.M, prov);
    kv(r, "relation_sigma" + suffix, to_string(rep.relation));
}

// Symbolic closed forms shown beside the table 1 values: C1, R1, D1, C2, R2, D2.
std::array<const char*, 6> table1_symbols(Kind kind) {
    switch (kind) {
        case Kind::A: return {"-(r-1)/r", "1", "1/r", "-(r-2)/r", "1", "2/r"};
        case Kind::B:
        case Kind::BC: return {"-1", "2", "1", "-1", "2", "1"};
        case Kind::C: return {"-1/2", "1", "1/2", "-1", "2", "1"};
        case Kind::D: return {"-1/2", "1", "1/2", "-1/2", "1", "1/2"};
    }
    return {};
}

Report table1(const InstanceArgs& args) {
    std::optional<Kind> kind;
    if (args.kind) kind = parse_kind(*args.kind);
    else if (args.family) kind = as_kind(*args.family);
    if (!kind) throw ValidationError("table 1 needs --kind A|B|C|BC|D", args.family.value_or("missing"));
    const int rank = require_rank(args);
    auto rs = std::make_shared<const RootSystem>(build_root_system(*kind, rank));
    const auto c = canonical_choice(*rs);
    const ParabolicData pd = parabolic_data(rs, unit_multiplicities(1), c->gamma);

    Report r;
    r.command = "table 1";
    echo_inputs(r, args);
    kv(r, "system", rs->name());
    kv(r, "gamma", label(c->gamma));
    kv(r, "weight_relation", tuple_text(pd.weight_coeffs));
    const auto sym = table1_symbols(*kind);
    auto emit = [&](int sigma, const std::string& suffix, std::size_t base) {
        const SigmaReport rep = sigma_report(pd, sigma);
        check_sigma(pd, rep);
        kv(r, "sigma" + suffix, label(sigma));
        const std::pair<const char*, Rat> cells[] = {{"C_sigma", rep.C}, {"R_sigma", rep.R}, {"D_sigma", rep.D}};
        for (std::size_t i = 0; i < 3; ++i) {
            const std::string key = cells[i].first + suffix;
            r.add_row().add("key", key).add("value", cells[i].second).add("closed_form", std::string(sym[base + i]));
            r.set_provenance(key, kBoth);
        }
    };
    if (c->sigma1) emit(*c->sigma1, "1", 0);
    if (c->sigma2) emit(*c->sigma2, "2", 3);
    return r;
}

Report table2(const InstanceArgs& args) {
    const GroupInstance g = resolve_instance(args);
    if (g.family == Family::SemisimpleProduct) throw ValidationError("table 2 needs a simple group", "product");
    const MultiplicityTable t = multiplicities(g).per_factor.at(0);
    Report r;
    r.command = "table 2";
    echo_inputs(r, args);
    kv(r, "instance", describe(g));
    const bool type_a = restricted_system(g)[0].kind == Kind::A;
    const std::pair<const char*, RootClass> classes[] = {{"e_i-e_j", type_a ? RootClass::AmbientA : RootClass::EiMinusEj},
                                                          {"e_i+e_j", RootClass::EiPlusEj},
                                                          {"e_i", RootClass::Ei},
                                                          {"2e_i", RootClass::TwoEi}};
    for (const auto& [name, cls] : classes) {
        const long long m = type_a && cls != RootClass::AmbientA ? 0 : t[cls];
        kv(r, std::string("m(") + name + ")", m, kFormula);
    }
    return r;
}

Report table3(const InstanceArgs& args) {
    const GroupInstance g = resolve_instance(args);
    auto rs = std::make_shared<const RootSystem>(root_system(g));
    const auto c = canonical_choice(*rs);
    if (!c || !c->sigma1) throw ValidationError("table 3 needs a simple instance of rank >= 2", rs->name());
    const ParabolicData pd = parabolic_data(rs, multiplicities(g), c->gamma);

    Report r;
    r.command = "table 3";
    echo_inputs(r, args);
    kv(r, "instance", describe(g));
    kv(r, "system", rs->name());
    kv(r, "gamma", label(c->gamma));
    kv(r, "Q_gamma", pd.Q, kBoth);
    auto emit = [&](int sigma, const std::string& suffix) {
        const SigmaReport rep = sigma_report(pd, sigma);
        check_sigma(pd, rep);
        kv(r, "sigma" + suffix, label(sigma));
        kv(r, "D_sigma" + suffix, rep.D, kBoth);
        kv(r, "M_sigma" + suffix, rep.M, kBoth);
        kv(r, "QD_sigma" + suffix, Rat(pd.Q) * rep.D, kFormula);
        kv(r, "inequality_sigma" + suffix, to_string(rep.relation));
    };
    emit(*c->sigma1, "1");
    if (c->sigma2) emit(*c->sigma2, "2");
    return r;
}

std::string p_threshold_text(const Verdict& v) {
    if (v.threshold == PThreshold::AllPGreaterThan1) return "p > 1";
    const int gamma = v.search.witness ? v.search.witness->gamma : 0;
    return "p > Confdim(boundary of H_" + label(gamma) + ")";
}

struct SweepPoint {
    int rank{0};
    std::optional<int> n;
    std::optional<int> d;
    std::string group;
};

struct SweepOutcome {
    SweepPoint point;
    GroupInstance instance;
    std::string system;
    long long q{0};
    std::optional<SigmaReport> sigma1;
    std::optional<SigmaReport> sigma2;
    CanonicalStatus canonical{CanonicalStatus::NotApplicable};
    std::optional<Witness> witness;
};

std::string relation_or_dash(const std::optional<SigmaReport>& rep) {
    return rep ? to_string(rep->relation) : "-";
}

}  // namespace

const std::vector<AliasEntry>& alias_table() {
    static const std::vector<AliasEntry> table = {
        {"SL<k>R, SL(<k>,R)", "SL, rank k-1, d=1, real"},
        {"SL<k>H, SL(<k>,H)", "SL, rank k-1, d=2, real"},
        {"SL<k>C, SL(<k>,C)", "complex A_{k-1}"},
        {"Sp<2r>R, Sp(<2r>,R)", "Sp, rank r, real"},
        {"Sp<2r>C, Sp(<2r>,C)", "complex C_r"},
        {"SO<k>C, SO(<k>,C)", "complex D_{k/2} (k even) or B_{(k-1)/2} (k odd)"},
        {"SU(p,q)", "SUh, n=p+q, rank min(p,q), real"},
        {"SO(p,q)", "SOq, n=p+q, rank min(p,q), real"},
        {"Sp(p,q)", "SUht, n=p+q, rank min(p,q), real"},
        {"SO*(2m)", "SOqt, n=m, rank floor(m/2), real"},
    };
    return table;
}

std::optional<GroupInstance> resolve_alias(std::string_view name) {
    const std::string s(name);
    std::smatch m;
    auto num = [&m](int i) { return std::stoi(m[i].str()); };
    static const std::regex sl(R"(SL_?(\d+)\(?([RHC])\)?|SL\((\d+),([RHC])\))");
    static const std::regex sp(R"(Sp_?(\d+)\(?([RC])\)?|Sp\((\d+),([RC])\))");
    static const std::regex so_c(R"(SO_?(\d+)\(?C\)?|SO\((\d+),C\))");
    static const std::regex pq(R"((SU|SO|Sp)\((\d+),(\d+)\))");
    static const std::regex so_star(R"(SO\*\((\d+)\))");

    auto pick = [&m](int a, int b) { return m[a].matched ? std::make_pair(a, b) : std::make_pair(a + 2, b + 2); };
    if (std::regex_match(s, m, sl)) {
        const auto [ki, fi] = pick(1, 2);
        const int k = num(ki);
        const char f = m[fi].str()[0];
        if (f == 'C') return GroupInstance::complex_simple(Kind::A, k - 1);
        return GroupInstance::sl(k - 1, f == 'H' ? 2 : 1, FieldKind::RealLike);
    }
    if (std::regex_match(s, m, pq)) {
        const int p = num(2), q = num(3);
        const std::string head = m[1].str();
        const Family fam = head == "SU" ? Family::SUh : head == "SO" ? Family::SOq : Family::SUht;
        return GroupInstance::form(fam, p + q, std::min(p, q), FieldKind::RealLike);
    }
    if (std::regex_match(s, m, sp)) {
        const auto [ki, fi] = pick(1, 2);
        const int k = num(ki);
        if (k % 2) throw ValidationError("Sp_k needs even k", s);
        if (m[fi].str() == "C") return GroupInstance::complex_simple(Kind::C, k / 2);
        return GroupInstance::sp(k / 2, FieldKind::RealLike);
    }
    if (std::regex_match(s, m, so_c)) {
        const int k = m[1].matched ? num(1) : num(2);
        return k % 2 ? GroupInstance::complex_simple(Kind::B, (k - 1) / 2) : GroupInstance::complex_simple(Kind::D, k / 2);
    }
    if (std::regex_match(s, m, so_star)) {
        const int k = num(1);
        if (k % 2) throw ValidationError("SO*(k) needs even k", s);
        return GroupInstance::form(Family::SOqt, k / 2, k / 4, FieldKind::RealLike);
    }
    return std::nullopt;
}

GroupInstance resolve_instance(const InstanceArgs& args) {
    const FieldKind field = parse_field(args.field);
    GroupInstance g;
    std::optional<Kind> kind;
    if (args.kind) kind = parse_kind(*args.kind);
    else if (args.family) kind = as_kind(*args.family);

    if (!kind && args.family) {
        if (auto alias = resolve_alias(*args.family)) {
            validate(*alias);
            return *alias;
        }
    }
    if (kind) {
        if (field != FieldKind::ComplexSplit)
            throw ValidationError("a bare root-system kind needs --field complex", to_string(field));
        g = GroupInstance::complex_simple(*kind, require_rank(args));
    } else {
        if (!args.family) throw ValidationError("--family is required", "missing");
        const Family fam = parse_family(*args.family);
        const int rank = require_rank(args);
        const bool form = fam == Family::SUh || fam == Family::SOq || fam == Family::SUht || fam == Family::SOqt;
        if (form && !args.n) throw ValidationError("--n is required for " + to_string(fam), "missing");
        if (field == FieldKind::ComplexSplit) {
            if (fam == Family::SL) g = GroupInstance::complex_simple(Kind::A, rank);
            else if (fam == Family::Sp) g = GroupInstance::complex_simple(Kind::C, rank);
            else if (fam == Family::SOq && (*args.n == 2 * rank || *args.n == 2 * rank + 1))
                g = GroupInstance::complex_simple(*args.n == 2 * rank ? Kind::D : Kind::B, rank);
            else
                throw ValidationError("complex field supports SL, Sp and SOq with n in {2r, 2r+1}",
                                      to_string(fam));
        } else if (fam == Family::SL) {
            g = GroupInstance::sl(rank, args.d.value_or(1), field);
        } else if (fam == Family::Sp) {
            g = GroupInstance::sp(rank, field);
        } else {
            g = GroupInstance::form(fam, *args.n, rank, field);
        }
    }
    validate(g);
    return g;
}

Report cmd_table(int which, const InstanceArgs& args) {
    switch (which) {
        case 1: return table1(args);
        case 2: return table2(args);
        case 3: return table3(args);
        default: throw ValidationError("table must be 1, 2 or 3", std::to_string(which));
    }
}

Report cmd_verdict(const InstanceArgs& args, int grid_bound) {
    const GroupInstance g = resolve_instance(args);
    const Verdict v = search_witness(g);
    auto rs = std::make_shared<const RootSystem>(root_system(g));
    const Multiplicities mult = multiplicities(g);

    Report r;
    r.command = "verdict";
    echo_inputs(r, args);
    kv(r, "instance", describe(g));
    kv(r, "system", rs->name());
    kv(r, "outcome", v.vanishes() ? "VanishesDeg2" : "NoWitnessFound");
    kv(r, "reason", v.vanishes() ? "-" : to_string(v.search.reason));

    std::optional<ParabolicData> scan_pd;
    oracle::ScanOptions scan_opts;
    scan_opts.grid_bound = grid_bound;
    bool expect_strict = false;
    if (v.search.witness) {
        const Witness& w = *v.search.witness;
        const ParabolicData pd = parabolic_data(rs, mult, w.gamma);
        check_sigma(pd, w.report1);
        check_sigma(pd, w.report2);
        kv(r, "gamma", label(w.gamma));
        kv(r, "Q_gamma", pd.Q, kBoth);
        sigma_rows(r, "1", w.report1, kBoth);
        sigma_rows(r, "2", w.report2, kBoth);
        scan_pd = pd;
        expect_strict = true;
    }
    kv(r, "canonical", to_string(v.search.canonical));
    kv(r, "canonical_sigma1", relation_or_dash(v.search.canonical_report1));
    kv(r, "canonical_sigma2", relation_or_dash(v.search.canonical_report2));
    kv(r, "p_threshold", v.threshold == PThreshold::AllPGreaterThan1 ? "AllPGreaterThan1" : "PGreaterThanConfdim");
    kv(r, "p_condition", p_threshold_text(v));
    if (v.vanishes() && v.threshold == PThreshold::PGreaterThanConfdim)
        kv(r, "annotation", "p > Q_gamma = " + std::to_string(v.search.q_gamma) + " (sufficient)");

    if (!scan_pd && v.search.canonical_report1 && v.search.canonical_report2) {
        // No witness: probe the canonical coweight lines only.
        const auto c = canonical_choice(*rs);
        scan_pd = parabolic_data(rs, mult, c->gamma);
        scan_opts.lines = {*c->sigma1, *c->sigma2};
    }
    if (scan_pd) {
        const auto res = oracle::oracle_scan(*scan_pd, scan_opts);
        std::string status = oracle::to_string(res.outcome);
        if (expect_strict && res.outcome != oracle::ScanOutcome::FoundStrict) status += " (inconclusive)";
        kv(r, "oracle_scan", status);
        if (res.outcome != oracle::ScanOutcome::None) {
            kv(r, "oracle_direction", tuple_text(res.t));
            kv(r, "oracle_E", res.value, "oracle");
        }
    } else {
        kv(r, "oracle_scan", "not run");
    }
    return r;
}

Report cmd_sweep(const InstanceArgs& args, int rank_max, const Config& config) {
    if (rank_max > config.rank_cap)
        throw CapExceeded("rank_max " + std::to_string(rank_max) + " exceeds the cap " +
                          std::to_string(config.rank_cap));
    if (rank_max < 1) throw ValidationError("rank_max >= 1", std::to_string(rank_max));
    if (!args.family && !args.kind) throw ValidationError("--family is required", "missing");
    const FieldKind field = parse_field(args.field);
    const std::optional<Kind> kind = args.kind ? std::optional(parse_kind(*args.kind)) : as_kind(*args.family);

    std::vector<SweepPoint> points;
    for (int rank = 1; rank <= rank_max; ++rank) {
        if (kind) {
            points.push_back({rank, std::nullopt, std::nullopt, "all"});
            continue;
        }
        const Family fam = parse_family(*args.family);
        if (fam == Family::SL) {
            const int dmax = field == FieldKind::RealLike ? 2 : config.sweep_d_max;
            for (int d = args.d.value_or(1); d <= args.d.value_or(dmax); ++d)
                points.push_back({rank, std::nullopt, d, "d=" + std::to_string(d)});
        } else if (fam == Family::Sp) {
            points.push_back({rank, std::nullopt, std::nullopt, "all"});
        } else {
            std::optional<std::pair<int, int>> window;
            if (field == FieldKind::ComplexSplit) {
                if (fam == Family::SOq) window = std::make_pair(2 * rank, 2 * rank + 1);
            } else {
                window = n_window(fam, rank, field, config.sweep_n_extra);
            }
            if (!window) continue;
            for (int n = window->first; n <= window->second; ++n) {
                if (args.n && *args.n != n) continue;
                points.push_back({rank, n, std::nullopt, "n-2r=" + std::to_string(n - 2 * rank)});
            }
        }
    }

    auto evaluate = [&args](SweepPoint p) -> std::optional<SweepOutcome> {
        InstanceArgs a = args;
        a.rank = p.rank;
        a.n = p.n;
        a.d = p.d;
        GroupInstance g;
        try {
            g = resolve_instance(a);
        } catch (const ValidationError&) {
            return std::nullopt;
        } catch (const InvalidRank&) {
            return std::nullopt;
        }
        const Verdict v = search_witness(g);
        SweepOutcome o{p, g, root_system(g).name(), v.search.q_gamma, v.search.canonical_report1,
                       v.search.canonical_report2, v.search.canonical, v.search.witness};
        if (!o.witness) {
            auto rs = std::make_shared<const RootSystem>(root_system(g));
            o.q = parabolic_data(rs, multiplicities(g), 0).Q;
        }
        return o;
    };
    std::vector<std::future<std::optional<SweepOutcome>>> jobs;
    for (const auto& p : points) jobs.push_back(std::async(std::launch::async, evaluate, p));

    Report r;
    r.command = "sweep";
    echo_inputs(r, args);
    r.inputs.emplace_back("rank_max", std::to_string(rank_max));

    struct First {
        std::optional<int> sigma1, sigma2, canonical, witness;
    };
    std::vector<std::pair<std::string, First>> firsts;
    auto first_of = [&firsts](const std::string& group) -> First& {
        for (auto& [k, f] : firsts)
            if (k == group) return f;
        return firsts.emplace_back(group, First{}).second;
    };
    auto note = [](std::optional<int>& slot, int rank) {
        if (!slot) slot = rank;
    };

    for (auto& job : jobs) {
        const auto o = job.get();
        if (!o) continue;
        const SweepPoint& p = o->point;
        std::string key = "r=" + std::to_string(p.rank);
        if (p.n) key += " n=" + std::to_string(*p.n);
        if (p.d) key += " d=" + std::to_string(*p.d);
        Row& row = r.add_row();
        row.add("key", key).add("rank", static_cast<long long>(p.rank));
        if (p.n) row.add("n", static_cast<long long>(*p.n));
        if (p.d) row.add("d", static_cast<long long>(*p.d));
        row.add("system", o->system)
            .add("Q_gamma", o->q)
            .add("sigma1", relation_or_dash(o->sigma1))
            .add("sigma2", relation_or_dash(o->sigma2))
            .add("canonical", to_string(o->canonical))
            .add("witness", o->witness ? "yes" : "no")
            .add("witness_gamma", o->witness ? label(o->witness->gamma) : "-");

        First& f = first_of(p.group);
        if (o->sigma1 && o->sigma1->relation == Relation::StrictlyContracting) note(f.sigma1, p.rank);
        if (o->sigma2 && o->sigma2->relation == Relation::StrictlyContracting) note(f.sigma2, p.rank);
        if (o->canonical == CanonicalStatus::Succeeds) note(f.canonical, p.rank);
        if (o->witness) note(f.witness, p.rank);
    }
    auto cell = [](const std::optional<int>& v) -> Cell {
        if (v) return static_cast<long long>(*v);
        return std::string("none");
    };
    for (const auto& [group, f] : firsts) {
        r.add_row()
            .add("key", "first " + group)
            .add("first_sigma1_strict", cell(f.sigma1))
            .add("first_sigma2_strict", cell(f.sigma2))
            .add("first_canonical_witness", cell(f.canonical))
            .add("first_witness", cell(f.witness));
    }
    return r;
}

Report cmd_admissible(const InstanceArgs& args) {
    const GroupInstance g = resolve_instance(args);
    const UniformResult u = uniform_vanishing(g);
    Report r;
    r.command = "admissible";
    echo_inputs(r, args);
    kv(r, "instance", describe(g));
    for (const auto& info : u.good) {
        const std::string key = "good " + label(info.sigma);
        r.add_row().add("key", key).add("Q_sigma", info.q).add("dimension", info.dimension);
        r.set_provenance(key, kFormula);
    }
    kv(r, "m_star", u.max_good_q, kFormula);
    kv(r, "best_good_sigma", u.best_good_sigma >= 0 ? label(u.best_good_sigma) : "-");
    kv(r, "gamma", u.gamma ? label(*u.gamma) : "-");
    if (u.gamma) kv(r, "min_Q_gamma", u.min_q_gamma, kFormula);
    kv(r, "verdict", u.uniform ? "Uniform" : "NotUniform");
    kv(r, "reason", u.reason.empty() ? "-" : u.reason);
    return r;
}

Report cmd_oracle_check(const InstanceArgs& args, std::optional<int> gamma, int grid_bound) {
    std::optional<GroupInstance> g;
    std::vector<Factor> factors;
    Multiplicities mult;
    const bool bare_kind = args.kind || (args.family && as_kind(*args.family) &&
                                         parse_field(args.field) != FieldKind::ComplexSplit);
    if (bare_kind) {
        const Kind kind = parse_kind(args.kind ? *args.kind : *args.family);
        factors = {{kind, require_rank(args)}};
        mult = unit_multiplicities(1);
    } else {
        g = resolve_instance(args);
        factors = restricted_system(*g);
        mult = multiplicities(*g);
    }
    auto rs = std::make_shared<const RootSystem>(factors.size() == 1 ? build_root_system(factors[0].kind, factors[0].rank)
                                                                     : build_product(factors));
    Report r;
    r.command = "oracle-check";
    echo_inputs(r, args);
    kv(r, "system", rs->name());

    const auto roots = oracle::enumerate_positive_roots(factors);
    agree(roots.size() == rs->positives().size(), "the number of positive roots");
    kv(r, "positive_roots", static_cast<long long>(roots.size()), kBoth);

    std::map<std::vector<int>, std::vector<int>> formula;
    for (const auto& p : rs->positives()) formula[p.coords] = p.simple_coeffs;
    for (const auto& root : roots) {
        const auto oc = oracle::oracle_coefficients(factors, root);
        agree(coefficients(*rs, root) == oc, "coefficients of " + tuple_text(root));
        auto it = formula.find(root);
        agree(it != formula.end() && it->second == oc, "the positive root set");
    }
    kv(r, "coefficient_roundtrip", static_cast<long long>(roots.size()), kBoth);

    long long pairs = 0;
    for (int a = 0; a < rs->rank(); ++a) {
        const ParabolicData pd = parabolic_data(rs, mult, a);
        for (int b = 0; b < rs->rank(); ++b) {
            if (a == b) continue;
            agree(c_sigma(pd, b) == oracle::oracle_c_sigma(factors, a, b), "C_sigma");
            ++pairs;
        }
    }
    kv(r, "c_sigma_pairs", pairs, kBoth);

    const int gi = gamma.value_or(1) - 1;
    if (gi < 0 || gi >= rs->rank())
        throw ValidationError("--gamma must be between 1 and the rank", std::to_string(gamma.value_or(1)));
    const ParabolicData pd = parabolic_data(rs, mult, gi);
    kv(r, "gamma", label(gi));
    kv(r, "Q_gamma", pd.Q, kBoth);
    for (int s = 0; s < rs->rank(); ++s) {
        if (s == gi) continue;
        const SigmaReport rep = sigma_report(pd, s);
        check_sigma(pd, rep);
        const std::string key = "constants " + label(s);
        r.add_row()
            .add("key", key)
            .add("C", rep.C)
            .add("R", rep.R)
            .add("D", rep.D)
            .add("M", rep.M)
            .add("relation", to_string(rep.relation));
        r.set_provenance(key, kBoth);
    }
    const auto res = oracle::oracle_scan(pd, grid_bound);
    kv(r, "oracle_scan", oracle::to_string(res.outcome));
    kv(r, "scanned_directions", static_cast<long long>(res.directions));
    if (res.outcome != oracle::ScanOutcome::None) {
        kv(r, "oracle_direction", tuple_text(res.t));
        kv(r, "oracle_E", res.value, "oracle");
    }
    return r;
}

}  // namespace rootcontract
