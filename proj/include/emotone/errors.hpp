#pragma once

#include <stdexcept>
#include <string>

namespace emotone {

// Backend could not be reached (timeouts, refused connections, retry exhaustion).
struct TransportError : std::runtime_error {
    explicit TransportError(const std::string& msg) : std::runtime_error(msg) {}
};

// Backend answered, but the reply violates the wire contract.
struct ProtocolError : std::runtime_error {
    explicit ProtocolError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input data violates a documented precondition (bad rows, empty collections, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller broke an API contract; indicates a bug at the call site.
struct ContractError : std::logic_error {
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace emotone
