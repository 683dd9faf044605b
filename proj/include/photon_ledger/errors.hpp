#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace photon_ledger {

// Base of every error raised by the library. `kind()` is a stable
// machine-readable tag used by the CLI error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : Error("validation", join(violations)), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& items) {
        std::string out;
        for (const auto& item : items) {
            if (!out.empty()) out += "; ";
            out += item;
        }
        return out;
    }
    std::vector<std::string> violations_;
};

class ResolutionError : public Error {
public:
    explicit ResolutionError(const std::string& message) : Error("resolution", message) {}
};

class ResonanceError : public Error {
public:
    explicit ResonanceError(const std::string& message) : Error("resonance", message) {}
};

class ProximityError : public Error {
public:
    explicit ProximityError(const std::string& message) : Error("proximity", message) {}
};

class NonFiniteError : public Error {
public:
    NonFiniteError(std::size_t node, const std::string& message)
        : Error("non_finite", message), node_(node) {}
    std::size_t node() const noexcept { return node_; }

private:
    std::size_t node_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error("domain", message) {}
};

}  // namespace photon_ledger
