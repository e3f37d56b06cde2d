#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gyrokit {

/// Outcome of checking one algebraic law over a case domain.
///
/// `max_deviation` is meaningful for numeric models only; exact (finite)
/// models leave it at 0. A counterexample is recorded iff failures > 0,
/// and it is the first one in deterministic case order. When reports for
/// the same law are merged (partitioned runs), counts add and the
/// counterexample with the lexicographically smallest key wins.
struct Counterexample {
    std::vector<std::string> elements;  // rendered tuple members
    std::vector<double> key;            // sortable tuple key
};

struct LawReport {
    std::string law;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double max_deviation = 0.0;
    std::optional<Counterexample> counterexample;
    std::string note;

    bool pass() const { return failures == 0; }

    void record_case(bool ok, double deviation, Counterexample ce) {
        ++cases;
        if (deviation > max_deviation) max_deviation = deviation;
        if (!ok) {
            ++failures;
            if (!counterexample || ce.key < counterexample->key)
                counterexample = std::move(ce);
        }
    }

    void merge(const LawReport& other) {
        cases += other.cases;
        failures += other.failures;
        if (other.max_deviation > max_deviation) max_deviation = other.max_deviation;
        if (other.counterexample &&
            (!counterexample || other.counterexample->key < counterexample->key))
            counterexample = other.counterexample;
        if (note.empty()) note = other.note;
    }
};

inline bool all_pass(const std::vector<LawReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass()) return false;
    return true;
}

}  // namespace gyrokit
