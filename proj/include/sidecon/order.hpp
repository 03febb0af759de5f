#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sidecon/monomial.hpp"

namespace sidecon {

// Term orders used by the ideal engine. Block orders compare group by
// group (earlier groups rank higher) with grevlex inside each group; this
// is the order elimination runs on, never pure lex over the whole ring.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    static MonomialOrder block(std::vector<std::vector<std::size_t>> groups) {
        return MonomialOrder(Kind::Block, std::move(groups));
    }

    Kind kind() const { return kind_; }
    const std::vector<std::vector<std::size_t>>& groups() const { return groups_; }

    bool less(const Monomial& a, const Monomial& b) const;
    bool equal(const Monomial& a, const Monomial& b) const { return a == b; }
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    std::string describe() const;

private:
    MonomialOrder(Kind k, std::vector<std::vector<std::size_t>> g)
        : kind_(k), groups_(std::move(g)) {}
    Kind kind_;
    std::vector<std::vector<std::size_t>> groups_;
};

}  // namespace sidecon
