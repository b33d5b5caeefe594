#include "uusc/theory/lp.hpp"

#include <algorithm>

namespace uusc::theory {

int LPDescription::var_index(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end())
        throw InvalidParams("unknown LP variable: " + name);
    return static_cast<int>(it - variables.begin());
}

namespace {

std::vector<Rational> dense_values(const LPDescription& lp,
                                   const std::map<std::string, Rational>& by_name) {
    std::vector<Rational> x(lp.variables.size(), Rational(0));
    for (const auto& [name, val] : by_name)
        x[static_cast<size_t>(lp.var_index(name))] = val;
    return x;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool satisfied(const Rational& lhs, Sense sense, const Rational& rhs) {
    switch (sense) {
        case Sense::LE: return lhs <= rhs;
        case Sense::EQ: return lhs == rhs;
        case Sense::GE: return lhs >= rhs;
    }
    return false;
}

bool check_feasible(const LPDescription& lp, const std::vector<Rational>& x,
                    const std::string& side, std::vector<std::string>& violations,
                    std::vector<std::string>* tight) {
    bool ok = true;
    for (size_t j = 0; j < lp.variables.size(); ++j) {
        if (lp.nonnegative[j] && x[j] < 0) {
            violations.push_back(side + ": variable " + lp.variables[j] + " negative");
            ok = false;
        }
    }
    for (const auto& c : lp.constraints) {
        Rational lhs = dot(c.coeffs, x);
        if (!satisfied(lhs, c.sense, c.rhs)) {
            violations.push_back(side + ": constraint " + c.name + " violated");
            ok = false;
        } else if (tight && lhs == c.rhs) {
            tight->push_back(c.name);
        }
    }
    return ok;
}

} // namespace

CertReport check_certificate(const LPDescription& primal_lp,
                             const LPDescription& dual_lp,
                             const LPCertificate& cert) {
    if (primal_lp.constraints.size() != dual_lp.variables.size() ||
        primal_lp.variables.size() != dual_lp.constraints.size())
        throw DimensionMismatch("check_certificate: primal/dual dimensions disagree");

    CertReport rep;
    const auto x = dense_values(primal_lp, cert.primal);
    const auto y = dense_values(dual_lp, cert.dual);

    rep.primal_feasible =
        check_feasible(primal_lp, x, "primal", rep.violations, &rep.tight_primal_constraints);
    rep.dual_feasible = check_feasible(dual_lp, y, "dual", rep.violations, nullptr);

    rep.primal_objective = dot(primal_lp.objective, x);
    rep.dual_objective = dot(dual_lp.objective, y);
    rep.objectives_equal = rep.primal_objective == rep.dual_objective;
    if (!rep.objectives_equal)
        rep.violations.push_back("objectives differ: " + to_string(rep.primal_objective) +
                                 " vs " + to_string(rep.dual_objective));

    // Complementary slackness, pair by pair.
    rep.slackness_ok = true;
    for (size_t i = 0; i < primal_lp.constraints.size(); ++i) {
        if (y[i] == 0) continue;
        const auto& c = primal_lp.constraints[i];
        if (dot(c.coeffs, x) != c.rhs) {
            rep.slackness_ok = false;
            rep.violations.push_back("slackness: dual variable " + dual_lp.variables[i] +
                                     " nonzero but primal constraint " + c.name + " slack");
        }
    }
    for (size_t j = 0; j < primal_lp.variables.size(); ++j) {
        if (x[j] == 0) continue;
        const auto& c = dual_lp.constraints[j];
        if (dot(c.coeffs, y) != c.rhs) {
            rep.slackness_ok = false;
            rep.violations.push_back("slackness: primal variable " + primal_lp.variables[j] +
                                     " nonzero but dual constraint " + c.name + " slack");
        }
    }
    return rep;
}

bool is_dual_pair(const LPDescription& primal_lp, const LPDescription& dual_lp) {
    if (!primal_lp.maximize || dual_lp.maximize) return false;
    const size_t nvar = primal_lp.variables.size();
    const size_t ncon = primal_lp.constraints.size();
    if (dual_lp.variables.size() != ncon || dual_lp.constraints.size() != nvar)
        return false;

    for (size_t i = 0; i < ncon; ++i) {
        const auto& c = primal_lp.constraints[i];
        if (c.coeffs.size() != nvar) return false;
        // max-primal <= constraint -> nonnegative dual variable; = -> free.
        if (c.sense == Sense::LE && !dual_lp.nonnegative[i]) return false;
        if (c.sense == Sense::EQ && dual_lp.nonnegative[i]) return false;
        if (c.sense == Sense::GE) return false;
        if (dual_lp.objective[i] != c.rhs) return false;
    }
    for (size_t j = 0; j < nvar; ++j) {
        const auto& d = dual_lp.constraints[j];
        if (d.coeffs.size() != ncon) return false;
        // Nonnegative primal variable -> >= dual constraint; free -> =.
        if (primal_lp.nonnegative[j] && d.sense != Sense::GE) return false;
        if (!primal_lp.nonnegative[j] && d.sense != Sense::EQ) return false;
        if (d.rhs != primal_lp.objective[j]) return false;
        for (size_t i = 0; i < ncon; ++i)
            if (d.coeffs[i] != primal_lp.constraints[i].coeffs[j]) return false;
    }
    return true;
}

} // namespace uusc::theory
