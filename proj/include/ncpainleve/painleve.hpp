#pragma once

#include <array>
#include <utility>

#include "ncpainleve/hankel.hpp"

namespace ncp {

// Seed pair for the Painleve ladder: phi and psi satisfy
//
//   phi'' phi^{-1} = psi^{-1} psi'' = 2x - 2 phi psi
//   psi phi' - psi' phi = 2 beta
//
// up to the attained order (first identity to attained_order - 2, the
// constraint to attained_order - 1).
struct SeedSolution {
    RingElem phi;
    RingElem psi;
    Rational beta;
    int attained_order;
};

// Builds a seed pair as formal series from four coefficient matrices
// (the degree-0 and degree-1 coefficients of phi and psi).  The initial
// data must satisfy psi0 phi1 - psi1 phi0 = 2 beta I exactly, and phi0,
// psi0 must be invertible; higher coefficients follow order by order
// from the two second-order equations.
SeedSolution seed_solve(const CoefMatrix& phi0, const CoefMatrix& phi1, const CoefMatrix& psi0,
                        const CoefMatrix& psi1, const Rational& beta, int order,
                        const Rational& x0);

// The forced constant seed: phi = C, psi = C^{-1} x, beta = -1/2.
// For dim >= 2, C is the unipotent upper-shift I + sum E_{i,i+1}.
SeedSolution trivial_seed(int dim, const Rational& x0, int order);

// psi phi' - psi' phi - 2 beta, as a series.  Identically zero (not
// just at the base point) for every seed_solve output.
RingElem constraint_residual(const SeedSolution& seed);

// Residual of u'' - 2u^3 + 2xu + 2ux - 4(beta + 1/2).
RingElem ncp2_residual(const RingElem& u, const Rational& beta);

// Residual of the commutative form u'' - 2u^3 + 4xu - 4(beta + 1/2);
// scalar series only.
RingElem p2_commutative_residual(const RingElem& u, const Rational& beta);

// The first-order system in three dependent variables with scalar
// parameters alpha0, alpha1.
struct PainleveTriple {
    RingElem u0;
    RingElem u1;
    RingElem u2;
    Rational alpha0;
    Rational alpha1;
};

// The three residuals
//   u0' - u0 u2 - u2 u0 - alpha0
//   u1' + u1 u2 + u2 u1 - alpha1
//   u2' - u1 + u0
std::array<RingElem, 3> p2_system_residual(const PainleveTriple& tr);

// Reduction of the system to a single second-order equation in u2.
// The integration constant gamma is read off from
// u2^2 + u0 + u1 - (alpha0 + alpha1) x, which must be a central scalar
// constant (GammaNotConstant otherwise); the returned residual is
//   u2'' - 2 u2^3 + (a0+a1) x u2 + (a0+a1) u2 x + 2 gamma u2 - a1 + a0.
std::pair<RingElem, Rational> p2_reduction_residual(const PainleveTriple& tr);

// Canonical variables integrated from p' = p^2 + 2q - 2x and
// q' = alpha1 - (qp + pq) with alpha1 = 2(beta + 1).
struct HamiltonianState {
    RingElem p;
    RingElem q;
    Rational beta;
};

HamiltonianState hamiltonian_integrate(const CoefMatrix& p0, const CoefMatrix& q0,
                                       const Rational& beta, int order, const Rational& x0);

// The triple (u2, u1, u0) = (p, q, 2x - q - p^2) carried by a
// Hamiltonian trajectory, with alpha0 = -2 beta, alpha1 = 2(beta + 1).
PainleveTriple triple_from_hamiltonian(const HamiltonianState& st);

// The ladder chain identities, evaluated on a Hankel system built from
// a seed pair with parameter beta (boundary cases n = 1 are rewritten
// so that theta_0^{-1} and eta_0^{-1} are never formed):
//
//   Pos1: theta_n' theta_n^{-1} + theta_{n-1}' theta_{n-1}^{-1}
//                                 = 2(beta+n-1) theta_{n-1} theta_n^{-1}
//   Pos2: theta_n'' theta_n^{-1} = 2(x - theta_n theta_{n-1}^{-1})
//   Neg3: eta_{-n}^{-1} eta_{-n}' + eta_{-n+1}^{-1} eta_{-n+1}'
//                                 = -2(beta-n+1) eta_{-n}^{-1} eta_{-n+1}
//   Neg4: eta_{-n}^{-1} eta_{-n}'' = 2(x - eta_{-n+1}^{-1} eta_{-n})
//
// Neg3/Neg4 are the mirror images of Pos1/Pos2 under the product
// reversal that swaps the chains; the printed negative-side forms they
// replace are flagged in the record parameters.
enum class ChainIdentity { Pos1, Pos2, Neg3, Neg4 };

CheckResult chain_identity_check(const HankelSystem& sys, const Rational& beta,
                                 ChainIdentity which, int n);

// Verifies the ladder of solutions carried by a seed pair:
//   theta_n' theta_n^{-1} solves the equation with parameter beta+n-1,
// and on the negative side the logarithmic derivative of eta_{-n}^{-1}
// solves it with parameter beta-n.  Both noncommutative orientations
// of the negative-side logarithmic derivative are computed:
//   left  = (eta^{-1})' eta = -eta^{-1} eta'
//   right = eta (eta^{-1})' = -eta' eta^{-1}
// They coincide for scalar entries; for matrix entries the right
// orientation is an open question, so those records are exploratory.
std::vector<CheckResult> verify_ladder(const SeedSolution& seed, int n_max);

// Scalar rational solution at half-integer parameter: with the
// polynomial sequence a_0 = x, a_1 = 1, a_n = a_{n-1}' + sum a_i
// a_{n-2-i} and tau_N the N x N Hankel determinant, returns
//   u = tau_{N+1}'/tau_{N+1} - tau_N'/tau_N
// as a series about x0.  Solves the commutative equation with
// beta = N + 1/2.  BasePointSingular when a determinant vanishes at x0.
RingElem commutative_rational_solution(int big_n, const Rational& x0, int order);

}  // namespace ncp
