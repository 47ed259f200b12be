#ifndef NSIMPLEX_REPRODUCE_HPP
#define NSIMPLEX_REPRODUCE_HPP

#include <string>

namespace nsimplex {

/// Runs the built-in Z/25 and Z/8 reference pipelines end to end (electric
/// map restriction, tetrahedron verification, characters, cocycle checks,
/// nontriviality verdicts, quantum verification, gauge) and compares every
/// stage against embedded golden values.
struct ReferenceResult {
    bool ok = true;
    std::string report; // one line per check
};

ReferenceResult run_reference_pipelines(int threads = 0);

} // namespace nsimplex

#endif
