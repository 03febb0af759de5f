#pragma once

#include <vector>

#include "sidecon/ideal.hpp"
#include "sidecon/polynomial.hpp"

namespace sidecon {

// One polynomial component per state variable. Parameters may appear in
// components but are never differentiated against.
class VectorField {
public:
    VectorField() = default;
    VectorField(ContextPtr ctx, std::vector<Polynomial> components);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Polynomial>& components() const { return comps_; }
    const Polynomial& component(std::size_t i) const { return comps_.at(i); }
    std::size_t size() const { return comps_.size(); }
    bool is_zero() const;

    VectorField operator-() const;
    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField scale(const Polynomial& s) const;
    bool operator==(const VectorField& o) const { return comps_ == o.comps_; }

private:
    ContextPtr ctx_;
    std::vector<Polynomial> comps_;
};

// X_f(psi) = Dpsi * f, summed over state variables only.
Polynomial lie_derivative(const VectorField& f, const Polynomial& psi);

// [X_f(psi), ..., X_f^k(psi)], k >= 1.
std::vector<Polynomial> lie_derivatives(const VectorField& f, const Polynomial& psi, unsigned k);

// [g, f] = Df*g - Dg*f.
VectorField lie_bracket(const VectorField& g, const VectorField& f);

// [(ad g)(f), ..., (ad g)^k(f)], k >= 1.
std::vector<VectorField> adjoint_brackets(const VectorField& g, const VectorField& f, unsigned k);

Polynomial divergence(const VectorField& f);

// Columns of a state_count x columns matrix.
class FieldMatrix {
public:
    explicit FieldMatrix(std::vector<VectorField> cols);
    const std::vector<VectorField>& columns() const { return cols_; }
    const ContextPtr& context() const { return ctx_; }

private:
    ContextPtr ctx_;
    std::vector<VectorField> cols_;
};

// Ideal generated by all size x size minors, rows/columns enumerated in
// lexicographic index order.
VarietyIdeal minor_ideal(const FieldMatrix& m, unsigned size);

// det(f, g) for planar fields.
Polynomial planar_determinant(const VectorField& f, const VectorField& g);

}  // namespace sidecon
