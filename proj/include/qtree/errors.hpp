#ifndef QTREE_ERRORS_HPP
#define QTREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qtree {

// Register size exceeds the configured qubit budget.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed path or action code passed to the codec.
class CodecError : public std::runtime_error {
public:
    explicit CodecError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration: bad tree spec, malformed band, bad flag combination.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Search invoked with an empty marked set.
class NoSolutionError : public std::runtime_error {
public:
    explicit NoSolutionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qtree

#endif
