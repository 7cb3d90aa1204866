#pragma once

#include <stdexcept>
#include <string>

namespace prym {

struct InvalidDiscriminant : std::invalid_argument {
    explicit InvalidDiscriminant(const std::string& what)
        : std::invalid_argument(what) {}
};

struct DiscriminantMismatch : std::invalid_argument {
    explicit DiscriminantMismatch(const std::string& what)
        : std::invalid_argument(what) {}
};

struct InvalidPrototype : std::invalid_argument {
    explicit InvalidPrototype(const std::string& what)
        : std::invalid_argument(what) {}
};

// Thrown by the spin machinery, which needs e odd and hence D odd.
struct OddDiscriminantRequired : std::domain_error {
    explicit OddDiscriminantRequired(const std::string& what)
        : std::domain_error(what) {}
};

}  // namespace prym
