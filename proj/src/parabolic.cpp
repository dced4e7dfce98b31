#include "rootcontract/parabolic.hpp"

#include "rootcontract/error.hpp"

#include <optional>

namespace rootcontract {

namespace {

void check_sigma(const ParabolicData& pd, int sigma) {
    if (sigma < 0 || sigma >= pd.rs->rank()) throw InvalidRank("simple root index out of range");
    if (sigma == pd.gamma)
        throw SameRoot("sigma must differ from gamma (" + simple_root_label(sigma) + ")");
}

}  // namespace

std::string to_string(Relation relation) {
    switch (relation) {
        case Relation::StrictlyContracting: return "strict";
        case Relation::Bounded: return "bounded";
        case Relation::Fails: return "fails";
    }
    return "?";
}

ParabolicData parabolic_data(std::shared_ptr<const RootSystem> rs, Multiplicities mult, int gamma) {
    if (gamma < 0 || gamma >= rs->rank()) throw InvalidRank("simple root index out of range");
    if (mult.per_factor.size() != rs->factors().size())
        throw InvariantViolation("multiplicity table does not match the factors of " + rs->name());

    ParabolicData pd;
    pd.gamma = gamma;
    pd.weight_coeffs = fundamental_weight_coeffs(*rs, gamma);
    for (const PositiveRoot& a : rs->positives()) {
        if (a.simple_coeffs[gamma] > 0) {
            pd.Q += static_cast<long long>(a.simple_coeffs[gamma]) * mult.of(a);
            pd.contracted.push_back(a);
        } else {
            pd.levi_pos.push_back(a);
        }
    }
    pd.rs = std::move(rs);
    pd.mult = std::move(mult);
    return pd;
}

Rat c_sigma(const ParabolicData& pd, int sigma) {
    check_sigma(pd, sigma);
    return -pd.weight_coeffs[sigma] / pd.weight_coeffs[pd.gamma];
}

Rat max_ratio(const ParabolicData& pd, int sigma) {
    check_sigma(pd, sigma);
    std::optional<Rat> best;
    for (const PositiveRoot& a : pd.contracted) {
        Rat ratio(a.simple_coeffs[sigma], a.simple_coeffs[pd.gamma]);
        if (!best || ratio > *best) best = ratio;
    }
    if (!best) throw InvariantViolation("no contracted roots");
    return *best;
}

long long modular_exponent(const ParabolicData& pd, int sigma) {
    check_sigma(pd, sigma);
    long long m = 0;
    for (const PositiveRoot& a : pd.levi_pos)
        if (a.simple_coeffs[sigma] > 0) m += static_cast<long long>(a.simple_coeffs[sigma]) * pd.mult.of(a);
    return m;
}

SigmaReport sigma_report(const ParabolicData& pd, int sigma) {
    SigmaReport rep;
    rep.sigma = sigma;
    rep.C = c_sigma(pd, sigma);
    rep.R = max_ratio(pd, sigma);
    rep.D = rep.R + rep.C;
    rep.M = modular_exponent(pd, sigma);
    const Rat rhs = Rat(pd.Q) * rep.D;
    const Rat lhs(rep.M);
    rep.relation = lhs > rhs ? Relation::StrictlyContracting
                             : (lhs == rhs ? Relation::Bounded : Relation::Fails);
    return rep;
}

Rat log_certificate(const ParabolicData& pd, std::span<const Rat> t) {
    const int r = pd.rs->rank();
    if (static_cast<int>(t.size()) != r)
        throw ConstraintViolated("direction has " + std::to_string(t.size()) + " entries, expected " +
                                 std::to_string(r));
    Rat constraint(0);
    for (int i = 0; i < r; ++i)
        if (pd.weight_coeffs[i].sign() != 0) constraint += pd.weight_coeffs[i] * t[i];
    if (constraint.sign() != 0)
        throw ConstraintViolated("direction is off the A^gamma hyperplane (sum c_i t_i = " +
                                 constraint.str() + ")");

    auto eval = [&](const PositiveRoot& a) {
        Rat v(0);
        for (int i = 0; i < r; ++i)
            if (a.simple_coeffs[i] != 0 && t[i].sign() != 0) v += Rat(a.simple_coeffs[i]) * t[i];
        return v;
    };

    Rat modular(0);
    for (const PositiveRoot& a : pd.levi_pos) modular += Rat(pd.mult.of(a)) * eval(a);

    std::optional<Rat> norm;
    for (const PositiveRoot& a : pd.contracted) {
        Rat v = eval(a) / Rat(a.simple_coeffs[pd.gamma]);
        if (!norm || v > *norm) norm = v;
    }
    return -modular + Rat(pd.Q) * norm.value_or(Rat(0));
}

std::vector<Rat> coweight_direction(const ParabolicData& pd, int sigma) {
    std::vector<Rat> t(pd.rs->rank(), Rat(0));
    t[pd.gamma] = c_sigma(pd, sigma);
    t[sigma] = Rat(1);
    return t;
}

}  // namespace rootcontract
