#pragma once

/// @file suite.hpp
/// @brief The invariant suite run by the verify command and the acceptance tests.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mfock/jacobi.hpp"
#include "mfock/piecewise.hpp"
#include "mfock/serialize.hpp"

namespace mfock::check {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    /// First counterexample, or null.
    Json witness;
};

struct SuiteConfig {
    JacobiData nu = JacobiData::constant(Rational(0), Rational(1), 6);
    /// Named functions used for word-based checks; empty selects three
    /// interval indicators on [0,1), [1,2), [2,3).
    std::map<std::string, PiecewisePolynomial> functions;
    int max_degree = 4;
    std::uint64_t seed = 1;
    /// Number of random cases per randomized property.
    int random_cases = 20;
    bool meixner = true;
};

/// Default family: h = chi_[0,1), g = t chi_[0,2), k = chi_[1,3).
std::map<std::string, PiecewisePolynomial> default_functions();

std::vector<CheckResult> run_suite(const SuiteConfig& config);

// Individual checks; each returns one result.
CheckResult check_piecewise_algebra(const SuiteConfig& config);
CheckResult check_orthogonality(const SuiteConfig& config);
CheckResult check_composition_counts(int max_n);
CheckResult check_simplex_oracle(std::uint64_t seed, int cases);
CheckResult check_monotone_product(const SuiteConfig& config);
CheckResult check_gram_positivity(const SuiteConfig& config);
CheckResult check_adjointness(const JacobiData& nu, std::uint64_t seed, int cases, int max_degree);
CheckResult check_grading(const SuiteConfig& config);
CheckResult check_moment_oracle(const SuiteConfig& config);
CheckResult check_projection_paths(const SuiteConfig& config);
CheckResult check_norm_identity(const JacobiData& nu, const std::vector<PiecewisePolynomial>& family, int max_degree);
CheckResult check_monotone_independence(const JacobiData& nu);
CheckResult check_shift_stationarity(const JacobiData& nu, const std::vector<PiecewisePolynomial>& family,
                                     int max_degree, const std::vector<Rational>& shifts);
CheckResult check_meixner(const SuiteConfig& config);
CheckResult check_recursions_agree(const SuiteConfig& config);
CheckResult check_off_simplex(const SuiteConfig& config);
CheckResult check_disjoint_projection(const JacobiData& nu);

/// Every word of length 1..max_degree over the family, shortest first, then lexicographic.
std::vector<std::vector<int>> all_words(int family_size, int max_degree);

}  // namespace mfock::check
