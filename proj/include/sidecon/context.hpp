#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sidecon {

class VariableContext;
using ContextPtr = std::shared_ptr<const VariableContext>;

// Ordered variable universe of one system: state variables first, then
// parameters. Declaration order is the canonical order used by every
// monomial order downstream.
class VariableContext {
public:
    static ContextPtr make(std::string system_name,
                           std::vector<std::string> states,
                           std::vector<std::string> params);

    // Same universe plus extra trailing variables (reserved names allowed
    // here; this is how Rabinowitsch/elimination variables are introduced).
    static ContextPtr extend(const ContextPtr& base, std::vector<std::string> extra);

    const std::string& system_name() const { return name_; }
    std::size_t size() const { return names_.size(); }
    std::size_t state_count() const { return state_count_; }
    std::size_t param_count() const { return names_.size() - state_count_; }
    bool is_state(std::size_t i) const { return i < state_count_; }
    const std::string& name_of(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& n) const;

    std::vector<std::size_t> state_indices() const;
    std::vector<std::size_t> param_indices() const;

    static constexpr const char* kReservedPrefix = "__";

private:
    VariableContext() = default;
    std::string name_;
    std::vector<std::string> names_;
    std::size_t state_count_ = 0;
};

inline bool same_context(const ContextPtr& a, const ContextPtr& b) { return a.get() == b.get(); }

struct ContextMismatch : std::runtime_error {
    ContextMismatch() : std::runtime_error("operands do not share a variable context") {}
};

}  // namespace sidecon
