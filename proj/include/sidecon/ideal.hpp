#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sidecon/order.hpp"
#include "sidecon/polynomial.hpp"

namespace sidecon {

// Finite generator list with an optional reduced Groebner basis. The basis,
// when present, is reduced: monic elements, no term of one divisible by the
// leading term of another.
class VarietyIdeal {
public:
    VarietyIdeal() = default;
    VarietyIdeal(ContextPtr ctx, std::vector<Polynomial> gens);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool has_basis() const { return basis_.has_value(); }
    const std::vector<Polynomial>& basis() const { return *basis_; }
    const MonomialOrder& basis_order() const { return *basis_order_; }

    bool is_zero_ideal() const;  // all generators zero (or none)
    bool contains_one() const;   // requires basis

    void attach_basis(std::vector<Polynomial> basis, MonomialOrder ord);

private:
    ContextPtr ctx_;
    std::vector<Polynomial> gens_;
    std::optional<std::vector<Polynomial>> basis_;
    std::optional<MonomialOrder> basis_order_;
};

// Buchberger with normal pair selection (smallest lcm, ties by index) and
// the coprime/chain elimination criteria. Deterministic for fixed input.
VarietyIdeal groebner_basis(const VarietyIdeal& ideal, const MonomialOrder& ord);

// Remainder of the division of p by the attached basis; cofactors, when
// requested, satisfy p = sum cofactor_i * basis_i + remainder exactly.
Polynomial normal_form(const Polynomial& p, const VarietyIdeal& ideal,
                       std::vector<Polynomial>* cofactors = nullptr);

// Division by an explicit polynomial list under an explicit order.
Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& divisors,
                     const MonomialOrder& ord, std::vector<Polynomial>* cofactors = nullptr);

enum class MembershipMode { Ideal, Radical };

// Radical mode decides p in sqrt(I) by the Rabinowitsch trick in a context
// extended by a reserved variable.
bool membership(const Polynomial& p, const VarietyIdeal& ideal, MembershipMode mode);

bool ideal_equal(const VarietyIdeal& a, const VarietyIdeal& b);

// Generators of I intersected with the subring without `drop`, via a block
// order with the dropped variables greatest.
VarietyIdeal elimination_ideal(const VarietyIdeal& ideal, const std::vector<std::size_t>& drop);

// Ensures a grevlex basis is attached (no-op when one already is).
VarietyIdeal with_basis(const VarietyIdeal& ideal);

// Combinatorial dimension of the leading-term ideal restricted to the given
// variables: size of a maximal variable subset avoiding all leading terms.
// Returns -1 for the unit ideal.
int combinatorial_dimension(const VarietyIdeal& with_basis_ideal,
                            const std::vector<std::size_t>& vars);

}  // namespace sidecon
