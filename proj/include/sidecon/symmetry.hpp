#pragma once

#include <optional>
#include <vector>

#include "sidecon/factor.hpp"
#include "sidecon/invariants.hpp"
#include "sidecon/lie.hpp"

namespace sidecon {

enum class RelationKind { Symmetry, OrbitalReducible };

// Cofactor evidence for [g_i, f] = alpha_i f + sum_j sigma_ij g_j.
struct SymmetryRelation {
    RelationKind kind;
    std::vector<VectorField> fields;
    std::vector<Polynomial> alpha;               // one per field
    std::vector<std::vector<Polynomial>> sigma;  // sigma[i][j]
    unsigned degree_bound;
    bool all_alpha_zero() const;
};

// Bounded-degree linear ansatz for the cofactors, preferring solutions with
// all alpha_i = 0 when they exist. Empty result means "not found at this
// bound", never "does not exist".
std::optional<SymmetryRelation> verify_relation(const VectorField& f,
                                                const std::vector<VectorField>& fields,
                                                unsigned degree_bound);

enum class SymmetrySetMode { Y, Z };

struct SymmetrySetResult {
    VarietyIdeal ideal;
    InvarianceCertificate certificate;
};

// Y: ideal of (r+1)x(r+1) minors of (f, g_1, ..., g_r); Z: r x r minors of
// (g_1, ..., g_r), admissible only with an all-alpha-zero relation.
SymmetrySetResult symmetry_invariant_sets(const VectorField& f,
                                          const std::vector<VectorField>& fields,
                                          SymmetrySetMode mode,
                                          const SymmetryRelation* evidence = nullptr);

struct PartialSymmetryResult {
    bool orbital;
    unsigned bracket_depth;  // adjoint iterates actually used
    ChainResult chain;
    bool verdict;  // nonempty stabilized variety certified invariant
};

// Side conditions are the components of (ad g)^k(f) (orbital: the 2x2
// minors of (f, (ad g)^k(f))), accumulated until the generated ideal
// stabilizes, then run through chain_stabilize.
PartialSymmetryResult partial_symmetry_chain(const VectorField& g, const VectorField& f,
                                             unsigned max_k, bool orbital);

struct PlanarFactorVerdict {
    Polynomial factor;
    bool invariant_for_f;  // factor divides X_f(factor)
    bool invariant_for_g;
};

struct PlanarAnalysis {
    bool degenerate = false;  // det(f, g) identically zero
    Polynomial theta;         // det(f, g)
    Polynomial numerator_a;   // X_g(theta) - theta div g
    Polynomial numerator_b;   // theta div f - X_f(theta)
    bool cleared_identity_ok = false;  // theta*[g,f] == A*f + B*g exactly
    std::vector<PlanarFactorVerdict> factors;
    bool involution = false;  // zero set of theta invariant for both fields
};

// Requires exactly two state variables. Hints are candidate factors,
// verified by exact_divide and rejected otherwise (rejected hints are
// simply not used; the caller sees which factors were split).
PlanarAnalysis planar_analysis(const VectorField& f, const VectorField& g,
                               const std::vector<Polynomial>& hints = {});

// lambda with X_f(sigma) = lambda * sigma, when the division is exact.
std::optional<Polynomial> semi_invariant_cofactor(const VectorField& f, const Polynomial& sigma);

}  // namespace sidecon
