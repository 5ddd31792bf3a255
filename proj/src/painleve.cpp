#include "ncpainleve/painleve.hpp"

#include <sstream>

namespace ncp {

namespace {

void check_same_dim_x0(const CoefMatrix& a, const CoefMatrix& b, const char* what) {
    if (a.dim() != b.dim()) throw DimensionMismatch(std::string(what) + ": dimensions differ");
}

}  // namespace

SeedSolution seed_solve(const CoefMatrix& phi0, const CoefMatrix& phi1, const CoefMatrix& psi0,
                        const CoefMatrix& psi1, const Rational& beta, int order,
                        const Rational& x0) {
    check_same_dim_x0(phi0, phi1, "seed_solve");
    check_same_dim_x0(phi0, psi0, "seed_solve");
    check_same_dim_x0(phi0, psi1, "seed_solve");
    if (order < 1) throw Error("seed_solve needs order >= 1");
    const int m = phi0.dim();

    CoefMatrix constraint = psi0 * phi1 - psi1 * phi0;
    CoefMatrix expected = CoefMatrix::scalar(m, Rational(2) * beta);
    if (constraint != expected)
        throw ConstraintViolated("initial data violates psi0 phi1 - psi1 phi0 = 2 beta: got " +
                                 constraint.str() + ", expected " + expected.str());
    if (!phi0.invertible()) throw SingularConstantTerm("phi0 is singular: " + phi0.str());
    if (!psi0.invertible()) throw SingularConstantTerm("psi0 is singular: " + psi0.str());

    std::vector<CoefMatrix> f(static_cast<std::size_t>(order) + 1, CoefMatrix(m));
    std::vector<CoefMatrix> g(static_cast<std::size_t>(order) + 1, CoefMatrix(m));
    f[0] = phi0;
    f[1] = phi1;
    g[0] = psi0;
    g[1] = psi1;
    // Coefficient k of the second derivative pins coefficient k+2:
    //   (k+2)(k+1) f_{k+2} = [t^k]( (2x - 2 phi psi) phi )
    //   (k+2)(k+1) g_{k+2} = [t^k]( psi (2x - 2 phi psi) )
    // and x = x0 + t is central, so [t^k](x u) = x0 u_k + u_{k-1}.
    for (int k = 0; k + 2 <= order; ++k) {
        CoefMatrix fk = Rational(2) * x0 * f[k];
        CoefMatrix gk = Rational(2) * x0 * g[k];
        if (k >= 1) {
            fk += Rational(2) * f[k - 1];
            gk += Rational(2) * g[k - 1];
        }
        for (int p = 0; p <= k; ++p)
            for (int q = 0; p + q <= k; ++q) {
                const int r = k - p - q;
                fk -= Rational(2) * (f[p] * (g[q] * f[r]));
                gk -= Rational(2) * (g[p] * (f[q] * g[r]));
            }
        const Rational inv_kk(1, static_cast<long>(k + 1) * (k + 2));
        f[k + 2] = inv_kk * fk;
        g[k + 2] = inv_kk * gk;
    }
    return SeedSolution{RingElem(x0, std::move(f)), RingElem(x0, std::move(g)), beta, order};
}

SeedSolution trivial_seed(int dim, const Rational& x0, int order) {
    if (order < 1) throw Error("trivial seed needs order >= 1");
    CoefMatrix c = CoefMatrix::identity(dim);
    for (int i = 0; i + 1 < dim; ++i) c.at(i, i + 1) = Rational(1);
    CoefMatrix c_inv = *c.inverse();
    RingElem phi = RingElem::constant(c, x0, order);
    std::vector<CoefMatrix> psi_coeffs(static_cast<std::size_t>(order) + 1, CoefMatrix(dim));
    psi_coeffs[0] = x0 * c_inv;
    psi_coeffs[1] = c_inv;
    return SeedSolution{std::move(phi), RingElem(x0, std::move(psi_coeffs)), Rational(-1, 2),
                        order};
}

RingElem constraint_residual(const SeedSolution& seed) {
    const RingElem& phi = seed.phi;
    const RingElem& psi = seed.psi;
    RingElem r = psi * phi.derive() - psi.derive() * phi;
    return r - RingElem::scalar(Rational(2) * seed.beta, phi.dim(), phi.base_point(),
                                r.valid_order());
}

RingElem ncp2_residual(const RingElem& u, const Rational& beta) {
    if (u.valid_order() < 2)
        throw OrderExhausted("residual needs a series valid to order >= 2");
    RingElem x = RingElem::variable(u.dim(), u.base_point(), u.valid_order());
    RingElem r = u.derive().derive() - Rational(2) * (u * u * u) + Rational(2) * (x * u) +
                 Rational(2) * (u * x);
    return r - RingElem::scalar(Rational(4) * beta + Rational(2), u.dim(), u.base_point(),
                                r.valid_order());
}

RingElem p2_commutative_residual(const RingElem& u, const Rational& beta) {
    if (u.dim() != 1)
        throw DimensionMismatch("commutative residual is defined for scalar series only");
    if (u.valid_order() < 2)
        throw OrderExhausted("residual needs a series valid to order >= 2");
    RingElem x = RingElem::variable(1, u.base_point(), u.valid_order());
    RingElem r = u.derive().derive() - Rational(2) * (u * u * u) + Rational(4) * (x * u);
    return r - RingElem::scalar(Rational(4) * beta + Rational(2), 1, u.base_point(),
                                r.valid_order());
}

std::array<RingElem, 3> p2_system_residual(const PainleveTriple& tr) {
    check_compatible(tr.u0, tr.u1);
    check_compatible(tr.u0, tr.u2);
    const int m = tr.u0.dim();
    const Rational& x0 = tr.u0.base_point();
    auto scal = [&](const Rational& r, int order) { return RingElem::scalar(r, m, x0, order); };
    RingElem r0 = tr.u0.derive() - tr.u0 * tr.u2 - tr.u2 * tr.u0;
    r0 = r0 - scal(tr.alpha0, r0.valid_order());
    RingElem r1 = tr.u1.derive() + tr.u1 * tr.u2 + tr.u2 * tr.u1;
    r1 = r1 - scal(tr.alpha1, r1.valid_order());
    RingElem r2 = tr.u2.derive() - tr.u1 + tr.u0;
    return {std::move(r0), std::move(r1), std::move(r2)};
}

std::pair<RingElem, Rational> p2_reduction_residual(const PainleveTriple& tr) {
    const int m = tr.u0.dim();
    const Rational& x0 = tr.u0.base_point();
    const Rational asum = tr.alpha0 + tr.alpha1;
    RingElem x = RingElem::variable(m, x0, tr.u2.valid_order());
    RingElem g = tr.u2 * tr.u2 + tr.u0 + tr.u1 - asum * x;
    for (int k = 1; k <= g.valid_order(); ++k)
        if (!g.coeff(k).is_zero())
            throw GammaNotConstant(
                "u2^2 + u0 + u1 - (alpha0+alpha1) x is not constant: nonzero t^" +
                std::to_string(k) + " coefficient (system residuals are not zero)");
    Rational gamma;
    if (!g.coeff(0).is_scalar(&gamma))
        throw GammaNotConstant("integration constant is not a central scalar: " +
                               g.coeff(0).str());
    RingElem r = tr.u2.derive().derive() - Rational(2) * (tr.u2 * tr.u2 * tr.u2) +
                 asum * (x * tr.u2) + asum * (tr.u2 * x) + (Rational(2) * gamma) * tr.u2;
    r = r - RingElem::scalar(tr.alpha1 - tr.alpha0, m, x0, r.valid_order());
    return {std::move(r), gamma};
}

HamiltonianState hamiltonian_integrate(const CoefMatrix& p0, const CoefMatrix& q0,
                                       const Rational& beta, int order, const Rational& x0) {
    check_same_dim_x0(p0, q0, "hamiltonian_integrate");
    if (order < 0) throw Error("hamiltonian_integrate needs order >= 0");
    const int m = p0.dim();
    const Rational alpha1 = Rational(2) * beta + Rational(2);
    std::vector<CoefMatrix> p(static_cast<std::size_t>(order) + 1, CoefMatrix(m));
    std::vector<CoefMatrix> q(static_cast<std::size_t>(order) + 1, CoefMatrix(m));
    p[0] = p0;
    q[0] = q0;
    for (int k = 0; k + 1 <= order; ++k) {
        // p' = p^2 + 2q - 2x,  q' = alpha1 - (qp + pq)
        CoefMatrix pd(m);
        for (int i = 0; i <= k; ++i) pd += p[i] * p[k - i];
        pd += Rational(2) * q[k];
        if (k == 0) pd -= CoefMatrix::scalar(m, Rational(2) * x0);
        if (k == 1) pd -= CoefMatrix::scalar(m, Rational(2));
        CoefMatrix qd(m);
        if (k == 0) qd += CoefMatrix::scalar(m, alpha1);
        for (int i = 0; i <= k; ++i) qd -= q[i] * p[k - i] + p[i] * q[k - i];
        const Rational inv_k(1, k + 1);
        p[k + 1] = inv_k * pd;
        q[k + 1] = inv_k * qd;
    }
    return HamiltonianState{RingElem(x0, std::move(p)), RingElem(x0, std::move(q)), beta};
}

PainleveTriple triple_from_hamiltonian(const HamiltonianState& st) {
    const int m = st.p.dim();
    const Rational& x0 = st.p.base_point();
    const int order = std::min(st.p.valid_order(), st.q.valid_order());
    RingElem x = RingElem::variable(m, x0, order);
    RingElem u0 = Rational(2) * x - st.q - st.p * st.p;
    return PainleveTriple{std::move(u0), st.q, st.p, Rational(-2) * st.beta,
                          Rational(2) * st.beta + Rational(2)};
}

CheckResult chain_identity_check(const HankelSystem& sys, const Rational& beta,
                                 ChainIdentity which, int n) {
    if (n < 1) throw Error("chain identities start at n = 1");
    RingElem x = RingElem::variable(sys.dim(), sys.base_point(), sys.seed_order());

    switch (which) {
        case ChainIdentity::Pos1: {
            const RingElem& tn = sys.theta(n);
            RingElem tn_inv = tn.invert();
            // theta_0' theta_0^{-1} = (psi^{-1})' psi at the boundary
            RingElem prev_log = (n >= 2) ? sys.theta(n - 1).derive() * sys.theta(n - 1).invert()
                                         : sys.theta0().derive() * sys.psi();
            RingElem prev = (n >= 2) ? sys.theta(n - 1) : sys.theta0();
            Rational coef = Rational(2) * (beta + Rational(n - 1));
            RingElem r = tn.derive() * tn_inv + prev_log - coef * (prev * tn_inv);
            return residual_check("lemma33-pos1", {{"n", n}}, r);
        }
        case ChainIdentity::Pos2: {
            const RingElem& tn = sys.theta(n);
            RingElem t2 = (n >= 2) ? sys.theta(n) * sys.theta(n - 1).invert()
                                   : sys.phi() * sys.psi();
            RingElem r = tn.derive().derive() * tn.invert() - Rational(2) * x + Rational(2) * t2;
            return residual_check("lemma33-pos2", {{"n", n}}, r);
        }
        case ChainIdentity::Neg3: {
            const RingElem& en = sys.eta(n);
            RingElem en_inv = en.invert();
            // eta_0^{-1} eta_0' = phi (phi^{-1})' = -phi' phi^{-1}
            RingElem prev_log = (n >= 2) ? sys.eta(n - 1).invert() * sys.eta(n - 1).derive()
                                         : -(sys.phi().derive() * sys.eta0());
            RingElem prev = (n >= 2) ? sys.eta(n - 1) : sys.eta0();
            Rational coef = Rational(2) * (beta - Rational(n - 1));
            RingElem r = en_inv * en.derive() + prev_log + coef * (en_inv * prev);
            return residual_check("lemma33-neg3", {{"n", n}, {"form", "mirrored"}}, r);
        }
        case ChainIdentity::Neg4: {
            const RingElem& en = sys.eta(n);
            RingElem t2 = (n >= 2) ? sys.eta(n - 1).invert() * en : sys.phi() * sys.psi();
            RingElem r = en.invert() * en.derive().derive() - Rational(2) * x + Rational(2) * t2;
            return residual_check("lemma33-neg4", {{"n", n}, {"form", "mirrored"}}, r);
        }
    }
    throw Error("unknown chain identity");
}

std::vector<CheckResult> verify_ladder(const SeedSolution& seed, int n_max) {
    if (n_max < 1) throw Error("ladder depth must be >= 1");
    if (seed.attained_order < 2 * n_max + 6)
        throw OrderExhausted("ladder to depth " + std::to_string(n_max) +
                             " needs seed order >= " + std::to_string(2 * n_max + 6) + ", have " +
                             std::to_string(seed.attained_order));
    HankelSystem sys(seed.phi, seed.psi);
    const bool matrix_case = seed.phi.dim() > 1;
    std::vector<CheckResult> out;
    for (int n = 1; n <= n_max; ++n) {
        const Rational beta_eff = seed.beta + Rational(n - 1);
        const RingElem& tn = sys.theta(n);
        RingElem u = tn.derive() * tn.invert();
        CheckResult rec = residual_check(
            "theorem32-pos", {{"n", n}, {"beta", beta_eff.str_frac()}}, ncp2_residual(u, beta_eff));
        out.push_back(std::move(rec));
    }
    for (int n = 1; n <= n_max; ++n) {
        const Rational beta_eff = seed.beta - Rational(n);
        const RingElem& en = sys.eta(n);
        RingElem en_inv = en.invert();
        RingElem u_left = -(en_inv * en.derive());
        RingElem u_right = -(en.derive() * en_inv);
        CheckResult left = residual_check(
            "theorem32-neg", {{"n", n}, {"beta", beta_eff.str_frac()}, {"orientation", "left"}},
            ncp2_residual(u_left, beta_eff));
        left.exploratory = matrix_case;
        CheckResult right = residual_check(
            "theorem32-neg", {{"n", n}, {"beta", beta_eff.str_frac()}, {"orientation", "right"}},
            ncp2_residual(u_right, beta_eff));
        right.exploratory = matrix_case;
        out.push_back(std::move(left));
        out.push_back(std::move(right));
    }
    return out;
}

RingElem commutative_rational_solution(int big_n, const Rational& x0, int order) {
    if (big_n < 0) throw Error("solution index must be >= 0");
    if (order < 2 * big_n + 3)
        throw OrderExhausted("order " + std::to_string(order) + " too small for index " +
                             std::to_string(big_n));
    HankelSystem sys(RingElem::variable(1, x0, order), RingElem::one(1, x0, order));
    auto tau = [&](int k) { return tau_det(sys, k); };
    auto log_deriv = [&](const RingElem& t, const char* which) {
        if (t.coeff(0).at(0, 0).is_zero())
            throw BasePointSingular(std::string(which) + " vanishes at base point " + x0.str());
        return t.derive() * t.invert();
    };
    RingElem u = log_deriv(tau(big_n + 1), "numerator determinant");
    if (big_n >= 1) u = u - log_deriv(tau(big_n), "denominator determinant");
    return u;
}

}  // namespace ncp
