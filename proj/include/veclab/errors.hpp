#ifndef VECLAB_ERRORS_HPP
#define VECLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace veclab {

struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidCutError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedGateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateEncodingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a Pauli-sum propagation would exceed its term budget.
// Carries how far the propagation got.
struct ResourceLimitError : std::runtime_error {
    std::size_t terms_reached;
    std::size_t gates_applied;
    std::size_t t_gates_applied;
    ResourceLimitError(const std::string& msg, std::size_t terms, std::size_t gates,
                       std::size_t t_gates)
        : std::runtime_error(msg),
          terms_reached(terms),
          gates_applied(gates),
          t_gates_applied(t_gates) {}
};

struct NotXYPreservingError : std::runtime_error {
    std::string gate_name;
    std::string input_pauli;
    std::string escaped_pauli;
    NotXYPreservingError(const std::string& gate, const std::string& input,
                         const std::string& escaped)
        : std::runtime_error("gate " + gate + " leaves the X/Y subspace: " + input + " -> " +
                             escaped),
          gate_name(gate),
          input_pauli(input),
          escaped_pauli(escaped) {}
};

}  // namespace veclab

#endif
