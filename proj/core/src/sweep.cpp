#include "bsdecomp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "bsdecomp/errors.hpp"

namespace bsdecomp {
namespace {

struct BaseOutcome {
    long runs = 0;
    long completed = 0;
    long degenerate = 0;
    long mass_elimination = 0;
    std::vector<SweepViolation> violations;
};

void check_run(const DegreeTuple& base, Int a_next, const RecursiveReport& report,
               BaseOutcome& out) {
    auto flag = [&](const char* kind, std::string detail) {
        out.violations.push_back(SweepViolation{base.degrees(), a_next, kind, std::move(detail)});
    };

    if (!report.error_diagram.is_zero()) {
        flag("error_nonzero", "error diagram has entries left");
    }
    Decomposition as_decomposition{report.error_diagram.columns(), report.plain_terms()};
    if (recompose(as_decomposition) != betti_ci(extend(base, a_next))) {
        flag("recompose", "terms do not sum to the extended diagram");
    }
    if (!report.symmetric) {
        flag("symmetry", "canonical term list is not palindromic");
    }
    if (a_next >= base.total() && !report.is_chain) {
        flag("chain", "sequences not totally ordered although a_next >= a");
    }
    if (from_int(a_next) > report.stability_bound) {
        if (!report.agrees_with_standard) {
            flag("standard_agreement", "terms differ from the greedy decomposition");
        }
        const ConjectureReport conjecture = conjecture_phase2(base, a_next);
        if (!conjecture.all_equal) {
            flag("conjecture", "a phase-2 coefficient misses the closed-form prediction");
        }
    }
}

BaseOutcome sweep_base(const DegreeTuple& base, const SweepConfig& config) {
    BaseOutcome out;

    std::set<Int> points;
    const Int low = base.largest();
    const Int high = base.total() + config.next_range;
    for (Int v = low; v <= high; ++v) points.insert(v);
    try {
        const Int above = floor_to_int(stability_bound(base)) + 1;
        for (Int v = above; v < above + 3; ++v) points.insert(v);
    } catch (const MassEliminationUnsupported&) {
        // every extension attempt below reports the same failure
    }

    for (Int a_next : points) {
        ++out.runs;
        try {
            const RecursiveReport report = new_algorithm(base, a_next);
            ++out.completed;
            check_run(base, a_next, report, out);
        } catch (const DegenerateSequence&) {
            ++out.degenerate;
        } catch (const MassEliminationUnsupported&) {
            ++out.mass_elimination;
        } catch (const Error& e) {
            out.violations.push_back(
                SweepViolation{base.degrees(), a_next, "unexpected_error",
                               std::string(e.kind()) + ": " + e.what()});
        }
    }
    return out;
}

}  // namespace

std::vector<DegreeTuple> enumerate_tuples(int codim, Int max) {
    std::vector<DegreeTuple> out;
    std::vector<Int> current(codim, 1);
    while (true) {
        out.push_back(DegreeTuple(current));
        int k = codim - 1;
        while (k >= 0 && current[k] == max) --k;
        if (k < 0) break;
        ++current[k];
        for (int i = k + 1; i < codim; ++i) current[i] = current[k];
    }
    return out;
}

SweepSummary run_sweep(const SweepConfig& config) {
    SweepSummary summary;
    summary.config = config;

    const std::vector<DegreeTuple> bases = enumerate_tuples(config.codim, config.max_degree);
    summary.bases = static_cast<long>(bases.size());

    int jobs = config.jobs > 0 ? config.jobs
                               : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(bases.size()));

    std::vector<BaseOutcome> outcomes(bases.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t k = cursor.fetch_add(1); k < bases.size(); k = cursor.fetch_add(1)) {
            outcomes[k] = sweep_base(bases[k], config);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    // Merge in base order so output is independent of scheduling.
    for (const BaseOutcome& outcome : outcomes) {
        summary.runs += outcome.runs;
        summary.completed += outcome.completed;
        summary.degenerate += outcome.degenerate;
        summary.mass_elimination += outcome.mass_elimination;
        summary.violations.insert(summary.violations.end(), outcome.violations.begin(),
                                  outcome.violations.end());
    }
    return summary;
}

}  // namespace bsdecomp
