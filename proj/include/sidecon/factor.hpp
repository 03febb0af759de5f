#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sidecon/polynomial.hpp"

namespace sidecon {

// Integer-primitive form with positive leading (grevlex) coefficient.
// Returns the normalized polynomial; the discarded unit is p / result.
Polynomial normalize_primitive(const Polynomial& p);

// Multivariate gcd via primitive polynomial remainder sequences on a
// recursive univariate view. Result is normalized primitive.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Quotient q with p = q*d when d divides p exactly, absent otherwise.
// Decided by single-divisor reduction: the remainder is zero iff divisible.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d);

// Square-free split: rational unit times per-variable monomial factors
// times square-free multiplicity classes, pairwise coprime, deterministic
// order. The product of factors^multiplicity equals the input up to a
// nonzero rational constant.
struct SquarefreeFactor {
    Polynomial factor;
    unsigned multiplicity;
};
std::vector<SquarefreeFactor> squarefree_factors(const Polynomial& p);

}  // namespace sidecon
