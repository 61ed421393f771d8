#pragma once

#include <stdexcept>
#include <string>

namespace fusionkit {

struct NonDivisorOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConductorMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotRepresentable : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonIntegral : std::logic_error {
    using std::logic_error::logic_error;
};

struct NotComputable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FixtureMissing : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct UnresolvedDiscrepancy : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoDual : std::logic_error {
    using std::logic_error::logic_error;
};

struct MultipleDuals : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace fusionkit
