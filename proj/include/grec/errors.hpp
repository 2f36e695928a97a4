#pragma once

#include <stdexcept>
#include <string>

namespace grec {

/// Thrown when an exhaustive operation is asked to run above its size guard.
class size_guard_error : public std::length_error {
public:
    explicit size_guard_error(const std::string& what) : std::length_error(what) {}
};

/// Thrown when the enumeration engine exceeds its configured distinct-string cap.
class memory_cap_error : public std::length_error {
public:
    memory_cap_error(const std::string& what, int level_reached)
        : std::length_error(what), level_reached(level_reached) {}

    int level_reached;
};

/// Signals a broken internal invariant (a bug, not a usage error).
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace grec
