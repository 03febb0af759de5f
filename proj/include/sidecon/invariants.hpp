#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sidecon/ideal.hpp"
#include "sidecon/lie.hpp"

namespace sidecon {

enum class CertificateKind { InvariantByCofactors, InvariantByRadical, NotInvariant };

// Certificate against the ideal's reduced Groebner basis elements psi_j.
// For the cofactor kind, X_f(psi_j) = sum_k nu_jk psi_k holds exactly and
// can be re-expanded. A refutation names a basis element whose Lie
// derivative fails radical membership.
struct InvarianceCertificate {
    CertificateKind kind;
    std::vector<Polynomial> basis;
    std::vector<std::vector<Polynomial>> cofactors;  // one row per basis element (cofactor rows)
    std::vector<bool> radical_only;                  // true where only sqrt(I) membership holds
    std::optional<Polynomial> refuted_generator;
    std::optional<Polynomial> refuted_derivative;
};

InvarianceCertificate certify_invariance(const VectorField& f, const VarietyIdeal& ideal);

struct ChainIteration {
    unsigned index;
    std::vector<Polynomial> new_generators;  // added this round
    std::size_t basis_size;                  // after the round
};

enum class ChainStatus { Stabilized, MaxIterExceeded };

struct ChainResult {
    std::vector<Polynomial> side_conditions;
    ChainStatus status;
    unsigned stabilization_index = 0;  // smallest K with I_K = I_{K+1}
    VarietyIdeal stabilized;
    bool empty_over_closure = false;  // 1 in the stabilized ideal
    std::optional<InvarianceCertificate> certificate;
    std::vector<ChainIteration> iterations;
};

// I_{j+1} = I_j + <X_f of each generator new in round j>, stopping at the
// first ideal_equal(I_j, I_{j+1}). Zero side conditions are skipped; an
// all-zero list stabilizes immediately to the zero ideal (whole space).
ChainResult chain_stabilize(const VectorField& f, const std::vector<Polynomial>& gammas,
                            unsigned max_iter);

// theta_j = X_f(phi_j) - rho_j.
std::vector<Polynomial> convert_differential(const VectorField& f,
                                             const std::vector<Polynomial>& phis,
                                             const std::vector<Polynomial>& rhos);

enum class LaSalleKind { Relation, FirstIntegral, NoDependence };

struct LaSalleRelation {
    LaSalleKind kind;
    Polynomial theta;
    unsigned k = 0;                      // smallest index with dependence
    std::vector<Polynomial> lie_chain;   // X_f(theta) ... X_f^{k+1}(theta)
    ContextPtr relation_context;         // fresh u_0..u_{k+1} variables
    Polynomial mu;                       // relation polynomial in the u's
    Polynomial nondegeneracy;            // D_{k+2} mu (theta(x), 0, ..., 0)
    VarietyIdeal candidate;              // Z = <X_f(theta), ..., X_f^{k+1}(theta)>
    std::optional<InvarianceCertificate> candidate_certificate;
};

// Finds the smallest k <= max_k such that theta, X_f(theta), ...,
// X_f^{k+1}(theta) are algebraically dependent (Jacobian criterion as a
// polynomial identity), then computes mu by elimination and verifies it
// vanishes under substitution. First integrals get a dedicated verdict.
LaSalleRelation lasalle_relation(const VectorField& f, const Polynomial& theta, unsigned max_k);

struct UnsolvedConstraintSystem {
    std::string description;
    ContextPtr unknowns;
    std::vector<Polynomial> constraints;
};

struct LaSalleCandidate {
    Polynomial theta;  // first nonzero coefficient normalized to 1
    LaSalleRelation relation;
    bool degenerate;  // candidate ideal empty or zero-dimensional
};

struct LaSalleSearchResult {
    std::vector<LaSalleCandidate> candidates;
    std::vector<UnsolvedConstraintSystem> unsolved;
    bool cap_exceeded = false;
};

// Undetermined-coefficient search for test functions up to the degree
// bound. Minor systems within the caps go to the ideal engine; oversized
// ones are emitted verbatim. A linear-relation stage (exact linear stratum,
// then the bilinear residual) supplies candidates, each re-verified through
// lasalle_relation.
LaSalleSearchResult lasalle_search(const VectorField& f, unsigned degree, unsigned max_k);

}  // namespace sidecon
