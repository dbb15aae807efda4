#pragma once

#include <stdexcept>

namespace tdet {

// Input outside an operation's documented domain (bad order, wrong branch,
// mismatched series lengths, parameters out of range, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A generator fails the hypothesis required by the bound being requested.
class ConditionNotMet : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The denominator g(z) + J_g(z)z vanished while evaluating the transfer form.
class SingularJacobian : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A sampled candidate exceeded a claimed sharp bound beyond tolerance.  This
// is never expected to fire; if it does, either the formulas or the sampler
// are wrong and the build must fail loudly.
class BoundViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tdet
