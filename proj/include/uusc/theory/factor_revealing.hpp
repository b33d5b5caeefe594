#pragma once
#include "uusc/theory/lp.hpp"

namespace uusc::theory {

// Closed-form optimum of the factor-revealing program for the packing-phase
// algorithm, by parity of p and k. Requires 1 <= p < k.
Rational closed_form_rho(int p, int k);

// The factor-revealing primal: variables a_{p,p} and a_{i,j} for
// i=p+1..k, j=1..i; maximize the phase-accounting objective subject to the
// availability, phase-p, and progress constraints.
LPDescription build_program_p(int p, int k);

// Its dual: variables beta_p..beta_k and gamma_{p+1}..gamma_k, ordered to
// match the primal constraint order (availability betas, beta_p, gammas).
LPDescription build_program_d(int p, int k);

// The closed-form optimal 0/1 primal assignment (by parity of k-p). For
// k-p = 1 the phase-p variable takes the value (p-1)/p instead of 1.
LPCertificate theorem1_primal(int p, int k);

// The closed-form dual solution (gamma recurrence + beta definitions);
// fills the dual part of the certificate.
LPCertificate appendix_dual(int p, int k);

// Primal and dual certificate for (p,k) combined.
LPCertificate pk_certificate(int p, int k);

struct CertifiedLP {
    LPDescription primal;
    LPDescription dual;
    LPCertificate certificate;
};

// The 9-variable Type A factor-revealing LP for the non-oblivious local
// search, with the printed dual and the optimal pair of value 35/24.
CertifiedLP typeA_certificate();

// The 6-variable Type B LP, value 7/5.
CertifiedLP typeB_certificate();

struct PkVerification {
    int p = 0;
    int k = 0;
    Rational rho;
    CertReport report;
    bool rho_matches = false; // closed form equals both LP objectives
    bool ok() const { return report.all_ok() && rho_matches; }
};

PkVerification verify_pk(int p, int k);

} // namespace uusc::theory
