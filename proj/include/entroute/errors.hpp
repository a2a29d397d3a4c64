#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace entroute {

// A node sequence that is not a connected, loop-free path of the graph.
class InvalidPathError : public std::invalid_argument {
public:
    explicit InvalidPathError(const std::string& what) : std::invalid_argument(what) {}
};

// A reservation that would push a switch past its qubit capacity.
class CapacityExceededError : public std::runtime_error {
public:
    CapacityExceededError(int switch_id, const std::string& what)
        : std::runtime_error(what), switch_id(switch_id) {}

    int switch_id;
};

// Topology generation exhausted its retry budget.
class GenerationFailedError : public std::runtime_error {
public:
    GenerationFailedError(std::uint64_t seed, const std::string& what)
        : std::runtime_error(what), seed(seed) {}

    std::uint64_t seed;
};

// Brute-force enumeration or the exhaustive search would exceed its guard.
class InstanceTooLargeError : public std::runtime_error {
public:
    explicit InstanceTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entroute
