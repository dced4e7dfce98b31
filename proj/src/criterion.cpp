#include "rootcontract/criterion.hpp"

#include "rootcontract/error.hpp"

#include <algorithm>

namespace rootcontract {

namespace {

bool at_least_bounded(const SigmaReport& r) { return r.relation != Relation::Fails; }

PairResult combine(int gamma, const SigmaReport& r1, const SigmaReport& r2) {
    if (at_least_bounded(r1) && at_least_bounded(r2) &&
        (r1.relation == Relation::StrictlyContracting || r2.relation == Relation::StrictlyContracting))
        return Witness{gamma, r1.sigma, r2.sigma, r1, r2};

    Failure f{-1, "", r1, r2};
    if (!at_least_bounded(r1)) {
        f.failing_sigma = r1.sigma;
        f.reason = simple_root_label(r1.sigma) + ": M < Q*D";
    } else if (!at_least_bounded(r2)) {
        f.failing_sigma = r2.sigma;
        f.reason = simple_root_label(r2.sigma) + ": M < Q*D";
    } else {
        f.reason = "both bounded, none strict";
    }
    return f;
}

std::optional<Witness> first_witness_from(int gamma, const std::vector<std::optional<SigmaReport>>& reports) {
    const int r = static_cast<int>(reports.size());
    for (int s1 = 0; s1 < r; ++s1) {
        if (!reports[s1] || !at_least_bounded(*reports[s1])) continue;
        for (int s2 = s1 + 1; s2 < r; ++s2) {
            if (!reports[s2]) continue;
            auto res = combine(gamma, *reports[s1], *reports[s2]);
            if (auto* w = std::get_if<Witness>(&res)) return *w;
        }
    }
    return std::nullopt;
}

std::vector<std::optional<SigmaReport>> all_reports(const ParabolicData& pd) {
    std::vector<std::optional<SigmaReport>> reports(pd.rs->rank());
    for (int s = 0; s < pd.rs->rank(); ++s)
        if (s != pd.gamma) reports[s] = sigma_report(pd, s);
    return reports;
}

}  // namespace

std::string to_string(PThreshold t) {
    return t == PThreshold::AllPGreaterThan1 ? "p > 1" : "p > Confdim(boundary of H_gamma)";
}

std::string to_string(CanonicalStatus s) {
    switch (s) {
        case CanonicalStatus::NotApplicable: return "n/a";
        case CanonicalStatus::Succeeds: return "succeeds";
        case CanonicalStatus::Fails: return "fails";
    }
    return "?";
}

std::string to_string(NoWitnessReason r) {
    switch (r) {
        case NoWitnessReason::None: return "";
        case NoWitnessReason::RankTooSmall: return "rank too small";
        case NoWitnessReason::AllPairsFail: return "no pair satisfies the inequality";
    }
    return "?";
}

PairResult check_pair(const ParabolicData& pd, int sigma1, int sigma2) {
    if (pd.rs->rank() < 3)
        throw RankTooSmall("need two simple roots besides gamma; rank is " + std::to_string(pd.rs->rank()));
    if (sigma1 == sigma2) throw SameRoot("sigma1 and sigma2 must differ");
    return combine(pd.gamma, sigma_report(pd, sigma1), sigma_report(pd, sigma2));
}

std::optional<CanonicalChoice> canonical_choice(const RootSystem& rs) {
    if (rs.is_product()) return std::nullopt;
    const Factor f = rs.factors()[0];
    CanonicalChoice c;
    if (f.kind == Kind::A) {
        if (f.rank >= 2) c.sigma1 = 1;
        if (f.rank >= 3) c.sigma2 = 2;
    } else if (f.rank >= 2) {
        c.sigma1 = f.rank - 1;
        if (f.rank >= 3) c.sigma2 = f.rank - 2;
    }
    return c;
}

std::optional<Witness> first_witness(const ParabolicData& pd) {
    return first_witness_from(pd.gamma, all_reports(pd));
}

WitnessSearch search_witness(const std::shared_ptr<const RootSystem>& rs, const Multiplicities& mult) {
    WitnessSearch out;

    if (auto c = canonical_choice(*rs)) {
        const ParabolicData pd = parabolic_data(rs, mult, c->gamma);
        if (c->sigma1) out.canonical_report1 = sigma_report(pd, *c->sigma1);
        if (c->sigma2) out.canonical_report2 = sigma_report(pd, *c->sigma2);
        if (c->sigma1 && c->sigma2)
            out.canonical = std::holds_alternative<Witness>(check_pair(pd, *c->sigma1, *c->sigma2))
                                ? CanonicalStatus::Succeeds
                                : CanonicalStatus::Fails;
    }

    if (rs->rank() < 3) {
        out.reason = NoWitnessReason::RankTooSmall;
        return out;
    }
    for (int gamma = 0; gamma < rs->rank(); ++gamma) {
        const ParabolicData pd = parabolic_data(rs, mult, gamma);
        if (auto w = first_witness(pd)) {
            // Re-validate through the public pair check.
            if (!std::holds_alternative<Witness>(check_pair(pd, w->sigma1, w->sigma2)))
                throw InvariantViolation("witness failed re-validation");
            out.witness = w;
            out.q_gamma = pd.Q;
            return out;
        }
    }
    out.reason = NoWitnessReason::AllPairsFail;
    return out;
}

Verdict search_witness(const GroupInstance& instance) {
    validate(instance);
    auto rs = std::make_shared<const RootSystem>(root_system(instance));
    Verdict v;
    v.instance = instance;
    v.search = search_witness(rs, multiplicities(instance));
    v.threshold = instance.field == FieldKind::NonArchimedean ? PThreshold::AllPGreaterThan1
                                                              : PThreshold::PGreaterThanConfdim;
    return v;
}

std::vector<int> good_roots(const RootSystem& rs) {
    std::vector<int> out;
    for (int s = 0; s < rs.rank(); ++s) {
        const bool good = std::all_of(rs.positives().begin(), rs.positives().end(),
                                      [s](const PositiveRoot& a) { return a.simple_coeffs[s] <= 1; });
        if (good) out.push_back(s);
    }
    return out;
}

long long hyperbolic_dimension(const ParabolicData& pd) {
    for (const PositiveRoot& a : pd.contracted)
        if (a.simple_coeffs[pd.gamma] != 1)
            throw NotGoodRoot(simple_root_label(pd.gamma) + " is not a good root of " + pd.rs->name());
    return pd.Q + 1;
}

UniformResult uniform_vanishing(const std::shared_ptr<const RootSystem>& rs, const Multiplicities& mult) {
    UniformResult out;
    for (int s : good_roots(*rs)) {
        const ParabolicData pd = parabolic_data(rs, mult, s);
        out.good.push_back({s, pd.Q, hyperbolic_dimension(pd)});
        if (pd.Q > out.max_good_q || out.best_good_sigma < 0) {
            out.max_good_q = pd.Q;
            out.best_good_sigma = s;
        }
    }
    if (out.good.empty()) throw NotAdmissible(rs->name() + " has no good simple root");

    for (int gamma = 0; gamma < rs->rank() && rs->rank() >= 3; ++gamma) {
        const ParabolicData pd = parabolic_data(rs, mult, gamma);
        if (out.gamma && pd.Q >= out.min_q_gamma) continue;
        if (first_witness(pd)) {
            out.gamma = gamma;
            out.min_q_gamma = pd.Q;
        }
    }
    if (!out.gamma) {
        out.reason = "no gamma admits a witness";
        return out;
    }
    out.uniform = 2 * out.min_q_gamma <= out.max_good_q;
    if (!out.uniform) {
        out.reason = (out.good.size() == 1 && out.good[0].sigma == *out.gamma)
                         ? "only good root is gamma"
                         : "2*Q_gamma exceeds the largest good Q_sigma";
    }
    return out;
}

UniformResult uniform_vanishing(const GroupInstance& instance) {
    validate(instance);
    if (instance.field == FieldKind::NonArchimedean)
        throw ValidationError("uniform vanishing applies to real or complex groups", "field=nonarch");
    return uniform_vanishing(std::make_shared<const RootSystem>(root_system(instance)),
                             multiplicities(instance));
}

}  // namespace rootcontract
