#pragma once

#include "fusionkit/report.hpp"
#include "fusionkit/smatrix.hpp"
#include "fusionkit/verlinde.hpp"

#include <string>
#include <vector>

namespace fusionkit {

// Suite names accepted by run_verification, in execution order.
const std::vector<std::string>& suite_names();

// Shared immutable inputs for the suites.
struct VerifyContext {
    PartialSMatrix matrix;
    VerlindeEngine engine;

    VerifyContext();
};

SuiteReport run_suite(const VerifyContext& ctx, const std::string& name);

// `suite` is one of suite_names() or "all".
VerificationReport run_verification(const std::string& suite);

} // namespace fusionkit
