// Randomized and exhaustive consistency suites shared by the CLI and tests.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "osa/core.hpp"

namespace osa {

/// Uniform random generator with sequence lengths <= max_len.
Generator random_generator(std::mt19937_64& rng, const Params& p, int max_len);
/// Sum of up to `terms` random generators with small integer coefficients.
Element random_element(std::mt19937_64& rng, const Params& p, int max_len, int terms);

struct SuiteResult {
  long cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Antisymmetry and Jacobi in B0 canonical form.
SuiteResult jacobi_suite(std::uint64_t seed, long cases, const Params& p, int max_len);
/// act([a,b]) equals the commutator of actions on chains up to max_len.
SuiteResult homomorphism_suite(std::uint64_t seed, long cases, const Params& p, int gen_len, int max_len);
/// The sigma peeling identities and the three f-expansions of l, r and
/// sigma, for every index choice with #upper + #lower <= max_size.
SuiteResult identity_suite(const Params& p, int max_size, int max_len);

}  // namespace osa
