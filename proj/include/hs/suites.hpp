#pragma once

#include "hs/algebra.hpp"

#include <string>
#include <vector>

namespace hs {

struct SuiteReport {
    std::string name;
    long cases = 0;   // instances examined
    long passed = 0;
    std::vector<std::string> failures; // first few counterexamples
    std::vector<std::string> notes;    // scope statements, e.g. degree caps
    bool ok() const { return cases > 0 && passed == cases; }
};

// Suites: group-laws, subst-action, symbols, order-bound, integrability, dp-exp, gr-iso,
// env-relations, hs-modules, ell-inequality. cases <= 0 selects the acceptance sizes; a ring
// replaces the default sample algebras (gr-iso reads cases as the maximal degree).
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, int cases, unsigned long seed, const AlgebraPtr& ring = nullptr);

} // namespace hs
