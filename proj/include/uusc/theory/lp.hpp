#pragma once
#include <map>
#include <string>
#include <vector>

#include "uusc/errors.hpp"
#include "uusc/theory/rational.hpp"

namespace uusc::theory {

enum class Sense { LE, EQ, GE };

struct LPConstraint {
    std::string name;
    std::vector<Rational> coeffs; // one per variable
    Sense sense = Sense::LE;
    Rational rhs;
};

struct LPDescription {
    bool maximize = true;
    std::vector<std::string> variables;
    std::vector<Rational> objective;
    std::vector<bool> nonnegative; // per variable; false = free
    std::vector<LPConstraint> constraints;

    int var_index(const std::string& name) const;
};

// Claimed primal solution (by variable name of the primal LP) and dual
// solution (by variable name of the dual LP).
struct LPCertificate {
    std::map<std::string, Rational> primal;
    std::map<std::string, Rational> dual;
};

struct CertReport {
    bool primal_feasible = false;
    bool dual_feasible = false;
    bool objectives_equal = false;
    bool slackness_ok = false;
    Rational primal_objective;
    Rational dual_objective;
    std::vector<std::string> violations;
    std::vector<std::string> tight_primal_constraints;

    bool all_ok() const {
        return primal_feasible && dual_feasible && objectives_equal && slackness_ok;
    }
};

// Verifies a primal/dual optimality certificate with exact arithmetic.
// Pairing convention: primal constraint i corresponds to dual variable i,
// and primal variable j to dual constraint j (both by index).
CertReport check_certificate(const LPDescription& primal_lp,
                             const LPDescription& dual_lp,
                             const LPCertificate& cert);

// Structural check that `dual_lp` is the LP dual of `primal_lp` under the
// same index pairing: the dual constraint matrix is the transpose of the
// primal one, objective and right-hand sides are swapped, and senses and
// sign restrictions correspond.
bool is_dual_pair(const LPDescription& primal_lp, const LPDescription& dual_lp);

} // namespace uusc::theory
