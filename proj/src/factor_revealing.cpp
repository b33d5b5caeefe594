#include "uusc/theory/factor_revealing.hpp"

#include <map>

namespace uusc::theory {

namespace {

void require_pk(int p, int k) {
    if (p < 1 || p >= k)
        throw InvalidParams("require 1 <= p < k");
}

std::string a_name(int i, int j) {
    return "a_" + std::to_string(i) + "_" + std::to_string(j);
}

} // namespace

Rational closed_form_rho(int p, int k) {
    require_pk(p, k);
    HarmonicTable H;
    const bool p_even = p % 2 == 0;
    const bool k_even = k % 2 == 0;
    const Rational tail = Rational(1, k) - Rational(1, static_cast<long long>(k) * (k - 1));
    if (p_even && k_even)
        return H.h(k / 2) - H.h(p / 2) + 1;
    if (p_even && !k_even)
        return H.h((k - 1) / 2) - H.h(p / 2) + 1 + tail;
    if (!p_even && k_even)
        return 2 * (H.h(k) - H.h(p + 1)) - H.h(k / 2) + H.h((p + 1) / 2) + 1 + tail;
    return 2 * (H.h(k + 1) - H.h(p + 1)) - H.h((k + 1) / 2) + H.h((p + 1) / 2) + 1;
}

LPDescription build_program_p(int p, int k) {
    require_pk(p, k);
    LPDescription lp;
    lp.maximize = true;

    // Variables: a_{p,p}, then a_{i,j} for i=p+1..k, j=1..i.
    lp.variables.push_back(a_name(p, p));
    lp.objective.push_back(Rational(1, p + 1));
    for (int i = p + 1; i <= k; ++i) {
        for (int j = 1; j <= i; ++j) {
            lp.variables.push_back(a_name(i, j));
            if (i == k)
                lp.objective.push_back(Rational(j, k));
            else
                lp.objective.push_back(Rational(j, static_cast<long long>(i) * (i + 1)));
        }
    }
    lp.nonnegative.assign(lp.variables.size(), true);

    auto zero_row = [&lp] { return std::vector<Rational>(lp.variables.size(), Rational(0)); };
    auto idx = [&lp](int i, int j) { return static_cast<size_t>(lp.var_index(a_name(i, j))); };

    // Availability: sum_j a_{i,j} <= 1.
    for (int i = p + 1; i <= k; ++i) {
        LPConstraint c;
        c.name = "avail_" + std::to_string(i);
        c.coeffs = zero_row();
        for (int j = 1; j <= i; ++j) c.coeffs[idx(i, j)] = 1;
        c.sense = Sense::LE;
        c.rhs = 1;
        lp.constraints.push_back(std::move(c));
    }
    // Phase p: a_{p,p} <= 1.
    {
        LPConstraint c;
        c.name = "phase_p";
        c.coeffs = zero_row();
        c.coeffs[idx(p, p)] = 1;
        c.sense = Sense::LE;
        c.rhs = 1;
        lp.constraints.push_back(std::move(c));
    }
    // Progress: sum_j j a_{i-1,j} - sum_j j a_{i,j} - (i-2) a_{i,i} <= 0.
    // At i=p+1 the previous level collapses to p * a_{p,p}.
    for (int i = p + 1; i <= k; ++i) {
        LPConstraint c;
        c.name = "progress_" + std::to_string(i);
        c.coeffs = zero_row();
        if (i == p + 1) {
            c.coeffs[idx(p, p)] = p;
        } else {
            for (int j = 1; j <= i - 1; ++j) c.coeffs[idx(i - 1, j)] = j;
        }
        for (int j = 1; j <= i - 1; ++j) c.coeffs[idx(i, j)] -= j;
        c.coeffs[idx(i, i)] -= i - 2;
        c.sense = Sense::LE;
        c.rhs = 0;
        lp.constraints.push_back(std::move(c));
    }
    return lp;
}

LPDescription build_program_d(int p, int k) {
    require_pk(p, k);
    LPDescription lp;
    lp.maximize = false;

    // Variable order mirrors the primal constraint order: beta_{p+1..k},
    // beta_p, gamma_{p+1..k}.
    for (int i = p + 1; i <= k; ++i) {
        lp.variables.push_back("beta_" + std::to_string(i));
        lp.objective.push_back(1);
    }
    lp.variables.push_back("beta_" + std::to_string(p));
    lp.objective.push_back(1);
    for (int i = p + 1; i <= k; ++i) {
        lp.variables.push_back("gamma_" + std::to_string(i));
        lp.objective.push_back(0);
    }
    lp.nonnegative.assign(lp.variables.size(), true);

    auto zero_row = [&lp] { return std::vector<Rational>(lp.variables.size(), Rational(0)); };
    auto beta = [&lp](int i) { return static_cast<size_t>(lp.var_index("beta_" + std::to_string(i))); };
    auto gamma = [&lp](int i) { return static_cast<size_t>(lp.var_index("gamma_" + std::to_string(i))); };

    // Constraint order mirrors the primal variable order: a_{p,p} first,
    // then a_{i,j} for i=p+1..k, j=1..i.
    {
        // beta_p + p gamma_{p+1} >= 1/(p+1)
        LPConstraint c;
        c.name = "d_" + a_name(p, p);
        c.coeffs = zero_row();
        c.coeffs[beta(p)] = 1;
        c.coeffs[gamma(p + 1)] = p;
        c.sense = Sense::GE;
        c.rhs = Rational(1, p + 1);
        lp.constraints.push_back(std::move(c));
    }
    for (int i = p + 1; i <= k; ++i) {
        for (int j = 1; j <= i; ++j) {
            LPConstraint c;
            c.name = "d_" + a_name(i, j);
            c.coeffs = zero_row();
            c.coeffs[beta(i)] = 1;
            c.sense = Sense::GE;
            if (i == k) {
                if (j <= k - 1) {
                    // beta_k - j gamma_k >= j/k
                    c.coeffs[gamma(k)] = -j;
                    c.rhs = Rational(j, k);
                } else {
                    // beta_k - (k-2) gamma_k >= 1
                    c.coeffs[gamma(k)] = -(k - 2);
                    c.rhs = 1;
                }
            } else {
                if (j <= i - 1) {
                    // beta_i - j gamma_i + j gamma_{i+1} >= j/(i(i+1))
                    c.coeffs[gamma(i)] = -j;
                    c.coeffs[gamma(i + 1)] = j;
                    c.rhs = Rational(j, static_cast<long long>(i) * (i + 1));
                } else {
                    // beta_i - (i-2) gamma_i + i gamma_{i+1} >= 1/(i+1)
                    c.coeffs[gamma(i)] = -(i - 2);
                    c.coeffs[gamma(i + 1)] = i;
                    c.rhs = Rational(1, i + 1);
                }
            }
            lp.constraints.push_back(std::move(c));
        }
    }
    return lp;
}

LPCertificate theorem1_primal(int p, int k) {
    require_pk(p, k);
    LPCertificate cert;
    auto set = [&cert](int i, int j, const Rational& v) { cert.primal[a_name(i, j)] = v; };

    const int diff = k - p;
    if (diff % 2 == 0) {
        for (int j = 0; j <= (diff - 2) / 2; ++j) {
            set(p + 2 * j + 1, p + 2 * j, 1);
            set(p + 2 * j, p + 2 * j, 1);
        }
        set(k, k, 1);
    } else {
        for (int j = 0; j <= (diff - 3) / 2; ++j) {
            set(p + 2 * j + 1, p + 2 * j, 1);
            set(p + 2 * j, p + 2 * j, 1);
        }
        set(k, k, 1);
        if (k - 1 > p) {
            set(k - 1, k - 2, 1);
        } else {
            // k-p = 1: the (k-1)-level is phase p, where the assignment
            // "a_{p,p-1} = 1" reads as a_{p,p} = (p-1)/p under the phase-p
            // scaling sum_j j a_{p,j} = p a_{p,p}.
            set(p, p, Rational(p - 1, p));
        }
    }
    return cert;
}

LPCertificate appendix_dual(int p, int k) {
    require_pk(p, k);
    std::map<int, Rational> g, b;
    g[k] = Rational(1, static_cast<long long>(k) * (k - 1));
    if (k - 1 >= p + 1) g[k - 1] = 0;
    for (int i = k - 2; i >= p + 1; --i)
        g[i] = g[i + 2] + Rational(2, static_cast<long long>(i) * (i + 1) * (i + 2));

    b[k] = 1 + (k - 2) * g[k];
    for (int i = p + 2; i <= k - 1; ++i)
        b[i] = Rational(1, i + 1) - i * g[i + 1] + (i - 2) * g[i];
    if (p + 1 < k)
        b[p + 1] = Rational(p, static_cast<long long>(p + 1) * (p + 2)) + p * g[p + 1] - p * g[p + 2];
    b[p] = Rational(1, p + 1) - p * g[p + 1];

    LPCertificate cert;
    for (const auto& [i, v] : b) cert.dual["beta_" + std::to_string(i)] = v;
    for (const auto& [i, v] : g) cert.dual["gamma_" + std::to_string(i)] = v;
    return cert;
}

LPCertificate pk_certificate(int p, int k) {
    LPCertificate cert = theorem1_primal(p, k);
    cert.dual = appendix_dual(p, k).dual;
    return cert;
}

PkVerification verify_pk(int p, int k) {
    PkVerification v;
    v.p = p;
    v.k = k;
    v.rho = closed_form_rho(p, k);
    const auto primal = build_program_p(p, k);
    const auto dual = build_program_d(p, k);
    v.report = check_certificate(primal, dual, pk_certificate(p, k));
    v.rho_matches = v.report.primal_objective == v.rho && v.report.dual_objective == v.rho;
    return v;
}

namespace {

Rational type_a_cost(int i, int j) {
    return Rational(i, 4) + Rational(j, 3) + Rational(4 - i - j, 2);
}

} // namespace

CertifiedLP typeA_certificate() {
    // Column classes (i,j): i elements met by 4-rows, j by 3-rows. The five
    // classes forced to zero at a local optimum are omitted.
    const std::vector<std::pair<int, int>> index_set = {
        {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {4, 0}};

    CertifiedLP out;
    LPDescription& P = out.primal;
    P.maximize = true;
    std::vector<Rational> swap_coeffs;
    for (auto [i, j] : index_set) {
        P.variables.push_back("X_" + std::to_string(i) + "_" + std::to_string(j));
        P.objective.push_back(type_a_cost(i, j));
        Rational c;
        if (i == 1 && j == 1) c = 3;
        else if (i == 2 && j == 0) c = 2;
        else c = -i;
        swap_coeffs.push_back(c);
    }
    P.nonnegative.assign(P.variables.size(), true);
    P.constraints.push_back({"swap_bound", swap_coeffs, Sense::LE, 0});
    P.constraints.push_back(
        {"total", std::vector<Rational>(P.variables.size(), Rational(1)), Sense::EQ, 1});

    LPDescription& D = out.dual;
    D.maximize = false;
    D.variables = {"y", "z"};
    D.objective = {0, 1};
    D.nonnegative = {true, false};
    for (size_t j = 0; j < P.variables.size(); ++j)
        D.constraints.push_back(
            {"d_" + P.variables[j], {swap_coeffs[j], 1}, Sense::GE, P.objective[j]});

    out.certificate.primal = {{"X_1_1", Rational(1, 4)}, {"X_1_2", Rational(3, 4)}};
    out.certificate.dual = {{"y", Rational(1, 24)}, {"z", Rational(35, 24)}};
    return out;
}

CertifiedLP typeB_certificate() {
    // X_i^4: 4-columns with i elements met by 4-rows; X_i^3 likewise for
    // 3-columns. Zero classes omitted.
    struct Var {
        std::string name;
        Rational cost;
        Rational swap_coeff;
    };
    const std::vector<Var> vars = {
        {"X4_2", Rational(3, 2), 2},  {"X4_3", Rational(5, 4), -3},
        {"X4_4", Rational(1), -4},    {"X3_1", Rational(5, 4), -1},
        {"X3_2", Rational(1), -2},    {"X3_3", Rational(3, 4), -3}};

    CertifiedLP out;
    LPDescription& P = out.primal;
    P.maximize = true;
    std::vector<Rational> swap_coeffs;
    for (const auto& v : vars) {
        P.variables.push_back(v.name);
        P.objective.push_back(v.cost);
        swap_coeffs.push_back(v.swap_coeff);
    }
    P.nonnegative.assign(P.variables.size(), true);
    P.constraints.push_back({"swap_bound", swap_coeffs, Sense::LE, 0});
    P.constraints.push_back(
        {"total", std::vector<Rational>(P.variables.size(), Rational(1)), Sense::EQ, 1});

    LPDescription& D = out.dual;
    D.maximize = false;
    D.variables = {"y", "z"};
    D.objective = {0, 1};
    D.nonnegative = {true, false};
    for (size_t j = 0; j < P.variables.size(); ++j)
        D.constraints.push_back(
            {"d_" + P.variables[j], {swap_coeffs[j], 1}, Sense::GE, P.objective[j]});

    out.certificate.primal = {{"X4_2", Rational(3, 5)}, {"X4_3", Rational(2, 5)}};
    out.certificate.dual = {{"y", Rational(1, 20)}, {"z", Rational(7, 5)}};
    return out;
}

} // namespace uusc::theory
