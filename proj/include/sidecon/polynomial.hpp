#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sidecon/context.hpp"
#include "sidecon/monomial.hpp"
#include "sidecon/order.hpp"
#include "sidecon/rational.hpp"

namespace sidecon {

// Exact multivariate polynomial over the rationals. Terms are stored in
// ascending grevlex order and never carry zero coefficients; two
// polynomials are equal iff their term maps are identical.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexLess>;

    Polynomial() = default;
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(const ContextPtr& ctx) { return Polynomial(ctx); }
    static Polynomial constant(const ContextPtr& ctx, const Rational& c);
    static Polynomial variable(const ContextPtr& ctx, std::size_t index);
    static Polynomial term(const ContextPtr& ctx, Monomial m, const Rational& c);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Rational> constant_value() const;  // empty if non-constant
    std::size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const;  // 0 for the zero polynomial
    unsigned degree_in(std::size_t var) const;
    bool involves(std::size_t var) const;
    bool involves_any_state() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned e) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Exact formal partial derivative with respect to one variable.
    Polynomial derivative(std::size_t var) const;

    // Simultaneous substitution; variables absent from the map stay put.
    Polynomial substitute(const std::map<std::size_t, Polynomial>& repl) const;
    Polynomial substitute_value(std::size_t var, const Rational& value) const;
    Rational eval(const std::vector<Rational>& point) const;

    // Coefficient of var^k, a polynomial in the remaining variables.
    Polynomial coefficient_of(std::size_t var, unsigned k) const;

    // Leading data under an arbitrary order (linear scan; desk scale).
    const Monomial& leading_monomial(const MonomialOrder& ord) const;
    const Rational& leading_coefficient(const MonomialOrder& ord) const;

    // Canonical rendering: descending grevlex, explicit '*', '^' powers.
    std::string str() const;

    // Same exponents re-homed in a context that extends this one.
    Polynomial lift(const ContextPtr& wider) const;
    // Inverse of lift: drops trailing variables, which must not occur.
    Polynomial restrict_to(const ContextPtr& narrower) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    ContextPtr ctx_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace sidecon
