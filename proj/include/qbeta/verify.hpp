#pragma once

#include <string>
#include <vector>

namespace qbeta {

struct CheckResult {
    std::string name;
    bool ok;
    std::string details;
};

std::vector<CheckResult> verify_esystem();
std::vector<CheckResult> verify_lemmas();
std::vector<CheckResult> verify_surface();
std::vector<CheckResult> verify_param();
std::vector<CheckResult> verify_torsion();
std::vector<CheckResult> verify_suite(const std::string& name);  // incl. "all"

/// Golden canonical forms of the four e-polynomials (fixed variable order).
extern const char* const kGoldenE[4];
/// Golden canonical form of the surface polynomial F.
extern const char* const kGoldenF;

}  // namespace qbeta
