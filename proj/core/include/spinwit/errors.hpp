#pragma once

#include <stdexcept>
#include <string>

namespace spinwit {

// A configured resource ceiling was hit: exact-backend row cap, Hilbert-space
// dimension cap, path-search node budget, or enumeration limit.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

// No upward jump of the decidable fraction exists in the scanned range.
struct NoJumpError : std::runtime_error {
    explicit NoJumpError(const std::string& msg) : std::runtime_error(msg) {}
};

// An eigenvalue landed farther than the residual tolerance from every
// admissible total-spin level.
struct ClusteringError : std::runtime_error {
    explicit ClusteringError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spinwit
