#pragma once

#include <stdexcept>

namespace thetakit {

// A formula's preconditions do not hold for the given input.
class Inapplicable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A configured size cap would be exceeded.
class ResourceLimit : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace thetakit
