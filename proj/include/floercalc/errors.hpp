#pragma once

#include <stdexcept>
#include <string>

namespace floercalc {

// Base for all domain-level failures. `kind()` is the stable machine-readable
// tag used in structured CLI error output and exit-code mapping.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Wrong number of arguments / index out of admissible range.
struct arity_error : error {
    explicit arity_error(const std::string& msg) : error("arity", msg) {}
};

// A value outside its admissible numeric range (e.g. a multiplicity < 2).
struct range_error : error {
    explicit range_error(const std::string& msg) : error("range", msg) {}
};

struct coprimality_error : error {
    explicit coprimality_error(const std::string& msg)
        : error("not pairwise coprime", msg) {}
};

struct overflow_error : error {
    explicit overflow_error(const std::string& msg) : error("overflow", msg) {}
};

// A method invoked outside its domain of validity (e.g. the trigonometric
// mu-bar route on an even product).
struct method_domain_error : error {
    explicit method_domain_error(const std::string& msg)
        : error("method domain", msg) {}
};

// A mathematical identity that must hold failed to hold. Signals a
// construction bug or an input that violates a structural assumption.
struct invariant_violation : error {
    explicit invariant_violation(const std::string& msg)
        : error("invariant violation", msg) {}
};

} // namespace floercalc
