#pragma once

#include <stdexcept>
#include <string>

namespace multifold {

// Thrown when a checker is asked about a colouring that does not cover every
// vertex.  Distinct from returning false: an incomplete colouring is neither
// proper nor improper.
struct IncompleteColouring : std::runtime_error {
    explicit IncompleteColouring(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an exact solver would exceed its configured state / universe cap.
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by a strategy that cannot produce a legal move (e.g. no kernel in the
// chosen set).  The game engine converts it into a protocol-error forfeit.
struct StrategyFailure : std::runtime_error {
    explicit StrategyFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace multifold
