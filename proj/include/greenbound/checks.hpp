#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greenbound/lattice.hpp"

namespace greenbound {

/// Outcome of a sampled inequality or oracle comparison.
struct SuiteResult {
    std::string name;
    int samples = 0;
    int violations = 0;
    std::string first_violation;
    double seconds = 0.0;

    bool ok() const noexcept { return samples > 0 && violations == 0; }
};

// Special-function inequalities
SuiteResult suite_P_neg1_bracket(int samples = 500, std::uint64_t seed = 101);
SuiteResult suite_Q_deriv_bracket(int samples = 500, std::uint64_t seed = 102);
SuiteResult suite_P2_regular_bound();
SuiteResult suite_gamma_ratio_sandwich(int samples = 1000, std::uint64_t seed = 103);
SuiteResult suite_h_U_bracket(int samples = 300, std::uint64_t seed = 104);

// Cusp-neighbourhood estimates
SuiteResult suite_lambda_integral();
SuiteResult suite_N_bracket();
SuiteResult suite_poisson_convolution(int samples = 10, std::uint64_t seed = 105);
SuiteResult suite_cusp_separation(int configurations = 50, std::uint64_t seed = 106);

// Oracle equivalences
SuiteResult suite_u_of_gamma_oracle(int samples = 1000, std::uint64_t seed = 107);
SuiteResult suite_count_soundness(const CountCertificate& cert, int samples = 200, std::uint64_t seed = 108);
SuiteResult suite_count_soundness(int samples = 200, std::uint64_t seed = 108);
SuiteResult suite_trapezoid_areas();
SuiteResult suite_P2_closed_form();

/// Every suite above with default sizes, in the order listed.
std::vector<SuiteResult> run_property_suites();

}  // namespace greenbound
