#pragma once

#include <string>
#include <vector>

#include "bsdecomp/koszul.hpp"
#include "bsdecomp/recursive.hpp"

namespace bsdecomp {

/// Exhaustive verification run over every nondecreasing base tuple of the
/// given codimension with degrees in [1, max_degree]. For each base, the
/// extension degree ranges over [a_c, a + next_range] plus three points
/// just above the stability bound, so the stabilized regime is always
/// exercised even when the bound exceeds a + next_range.
struct SweepConfig {
    int codim = 3;
    Int max_degree = 6;
    Int next_range = 5;
    int jobs = 0;  // 0: hardware concurrency
};

enum class RunStatus {
    Completed,
    Degenerate,       // a phase-2 sequence failed strict increase
    MassElimination,  // base decomposition has a multi-position step
};

/// A property that failed on a completed run, or an unexpected error.
struct SweepViolation {
    std::vector<Int> base;
    Int a_next;
    std::string kind;    // "error_nonzero", "symmetry", "chain", "recompose",
                         // "standard_agreement", "conjecture"
    std::string detail;
};

struct SweepSummary {
    SweepConfig config;
    long bases = 0;
    long runs = 0;
    long completed = 0;
    long degenerate = 0;
    long mass_elimination = 0;
    std::vector<SweepViolation> violations;

    bool clean() const { return violations.empty(); }
};

/// Properties checked on every completed run: the error diagram vanished
/// and the terms recompose the extended diagram; the canonical term list
/// is palindromic with check-dual-paired sequences; the sequences form a
/// chain when a_next >= a; and above the stability bound the term list
/// equals the greedy decomposition and the phase-2 coefficients match the
/// closed-form prediction. Results are deterministic regardless of jobs.
SweepSummary run_sweep(const SweepConfig& config);

/// All nondecreasing tuples of length `codim` with entries in [1, max].
std::vector<DegreeTuple> enumerate_tuples(int codim, Int max);

}  // namespace bsdecomp
