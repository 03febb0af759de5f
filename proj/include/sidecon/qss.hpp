#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sidecon/invariants.hpp"
#include "sidecon/lie.hpp"

namespace sidecon {

// Parameter-dependent system. Parameters are ring variables ordered below
// the states; in this module both parameters and states are treated as
// nonnegative quantities (rate constants and concentrations).
struct ParametricSystem {
    VectorField field;
    std::vector<bool> param_nonnegative;   // one per parameter, default true
    std::vector<std::size_t> qss_states;   // designated QSS-eligible states

    static ParametricSystem from_field(const VectorField& f);
};

enum class Provenance { UserDeclared, GeneratedStandardQss, GeneratedTotalQss, Derived };

struct NamedFunction {
    std::string name;
    Polynomial body;
    Provenance provenance;
};

// phi = X_f(target) for each rational linear combination of states.
std::vector<NamedFunction> qss_conditions(const ParametricSystem& sys,
                                          const std::vector<Polynomial>& targets);

enum class LeafKind {
    Invariant,
    NotInvariantBeyond,  // no factor of the remainder vanishes
    Inconclusive,        // depth exhausted
    EmptyVariety,
    WholeSpace,          // zero ideal (conditions annihilate everything)
};

// A certified manifold component at a leaf.
struct ManifoldComponent {
    VarietyIdeal ideal;
    InvarianceCertificate certificate;
    int dimension;         // state dimension over the closure
    bool stationary_only;
    std::optional<std::string> solved_form;  // "c = k1*e0*s/(k1*s+km1)" style
};

struct CaseLeaf {
    LeafKind kind;
    std::vector<std::string> conditions;      // rendered "k = 0" parameter conditions
    std::vector<Polynomial> condition_polys;  // the parameter polynomials set to zero
    VarietyIdeal ideal;
    std::vector<ManifoldComponent> components;  // certified manifolds (Invariant leaves)
    std::vector<std::string> notes;             // prunes, genericity assumptions
};

struct CaseNode {
    std::string label;  // branch description at this node
    std::vector<std::string> notes;
    std::optional<CaseLeaf> leaf;
    std::vector<std::unique_ptr<CaseNode>> children;
};

struct CaseTree {
    Polynomial phi;
    std::unique_ptr<CaseNode> root;
    std::vector<CaseLeaf> leaves;  // flat view, deduplicated
    bool inconclusive = false;     // some branch hit the depth bound
};

// Case split on the square-free factors of normal_form(X_f(phi), <ideal>),
// parameters below states in a block order. Parameter-only factors spawn
// substitution branches, state-involving factors augment the ideal;
// branches contradicting the nonnegativity assumptions are pruned with a
// note (boundary parameter cases are spawned instead).
CaseTree parametric_case_analysis(const ParametricSystem& sys, const NamedFunction& phi,
                                  unsigned depth);

struct LeafClassification {
    int dimension;
    bool stationary_only;
};

// Dimension from the block-order leading terms restricted to states;
// stationary_only iff every field component lies in sqrt(I).
LeafClassification classify_leaf(const VarietyIdeal& ideal, const VectorField& f);

}  // namespace sidecon
