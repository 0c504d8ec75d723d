#pragma once

#include <stdexcept>
#include <string>

namespace padlab {

// Base for all library errors. `name()` is the stable machine-readable
// identifier the CLI prints; `what()` carries the human explanation.
class error : public std::runtime_error {
public:
    error(std::string name, const std::string& msg)
        : std::runtime_error(msg), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

struct context_mismatch : error {
    explicit context_mismatch(const std::string& msg = "operands belong to different contexts")
        : error("ContextMismatch", msg) {}
};

struct non_prime : error {
    explicit non_prime(const std::string& msg) : error("NonPrime", msg) {}
};

struct invalid_context : error {
    explicit invalid_context(const std::string& msg) : error("InvalidContext", msg) {}
};

struct non_unit : error {
    explicit non_unit(const std::string& msg = "scalar is not a unit") : error("NonUnit", msg) {}
};

struct not_independent : error {
    explicit not_independent(const std::string& msg = "input system is not p-independent")
        : error("NotIndependent", msg) {}
};

struct ambient_too_small : error {
    explicit ambient_too_small(const std::string& msg = "no fresh direction left in the ambient module")
        : error("AmbientTooSmall", msg) {}
};

struct not_a_realization : error {
    explicit not_a_realization(const std::string& msg = "vector does not realize the defining type")
        : error("NotARealization", msg) {}
};

struct precondition_violated : error {
    explicit precondition_violated(const std::string& msg) : error("PreconditionViolated", msg) {}
};

struct precision_exhausted : error {
    explicit precision_exhausted(const std::string& msg = "value not determined at this precision")
        : error("PrecisionExhausted", msg) {}
};

struct context_too_large : error {
    explicit context_too_large(const std::string& msg = "enumeration context exceeds the state bound")
        : error("ContextTooLarge", msg) {}
};

struct unknown_suite : error {
    explicit unknown_suite(const std::string& msg) : error("UnknownSuite", msg) {}
};

struct parse_error : error {
    parse_error(int line, const std::string& msg)
        : error("ParseError", "line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& msg) : error("DimensionMismatch", msg) {}
};

}  // namespace padlab
