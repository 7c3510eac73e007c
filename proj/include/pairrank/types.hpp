#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace pairrank {

enum class TaskMode { Verifiable, FuzzyPairwise, FuzzyPointwise };

/// Outcome variants. Exactly one applies per sample, matching the group's
/// task mode.
struct Correctness {
    bool correct = false;
};
struct QualityRank {
    int rank = 0;  // 0 = best; ranks within a group form a permutation
};
struct Score {
    double value = 0.0;
};

using Outcome = std::variant<Correctness, QualityRank, Score>;

struct RewardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModeMismatch : RewardError {
    using RewardError::RewardError;
};
struct NoMatchingScenario : RewardError {
    using RewardError::RewardError;
};
struct AmbiguousScenario : RewardError {
    using RewardError::RewardError;
};
struct EmptyGroup : RewardError {
    using RewardError::RewardError;
};
struct RankOutOfRange : RewardError {
    using RewardError::RewardError;
};
struct InvalidGroupSize : RewardError {
    using RewardError::RewardError;
};
struct MissingQualityOrder : RewardError {
    using RewardError::RewardError;
};
struct InvalidSpec : RewardError {
    using RewardError::RewardError;
};
struct ShapeMismatch : RewardError {
    using RewardError::RewardError;
};
struct DuplicateCorrectLength : RewardError {
    using RewardError::RewardError;
};

/// One rollout in a group. `length` is in abstract units (tokens in
/// verifiable mode, judge-visible characters in fuzzy mode).
struct ResponseSample {
    int id = 0;
    long long length = 0;
    Outcome outcome{Correctness{}};
    bool artificial = false;

    bool has_correctness() const { return std::holds_alternative<Correctness>(outcome); }
    bool has_quality_rank() const { return std::holds_alternative<QualityRank>(outcome); }
    bool has_score() const { return std::holds_alternative<Score>(outcome); }

    bool correct() const {
        if (auto* c = std::get_if<Correctness>(&outcome)) return c->correct;
        throw ModeMismatch("sample " + std::to_string(id) + " carries no correctness outcome");
    }
    int quality_rank() const {
        if (auto* q = std::get_if<QualityRank>(&outcome)) return q->rank;
        throw ModeMismatch("sample " + std::to_string(id) + " carries no quality rank");
    }
    double score() const {
        if (auto* s = std::get_if<Score>(&outcome)) return s->value;
        throw ModeMismatch("sample " + std::to_string(id) + " carries no score");
    }
};

inline ResponseSample make_verifiable_sample(int id, long long length, bool correct,
                                             bool artificial = false) {
    return ResponseSample{id, length, Correctness{correct}, artificial};
}

inline ResponseSample make_ranked_sample(int id, long long length, int rank) {
    return ResponseSample{id, length, QualityRank{rank}, false};
}

/// Reward-shaping parameters. alpha is the correctness (or preference)
/// reward, beta the length reward, group_size the number of real samples N.
struct RewardConfig {
    double alpha = 5.0;
    double beta = 1.0;
    int group_size = 8;
    TaskMode mode = TaskMode::Verifiable;
    bool include_artificial = false;

    void validate() const {
        if (!(alpha > 0.0)) throw InvalidSpec("alpha must be > 0");
        if (!(beta > 0.0)) throw InvalidSpec("beta must be > 0");
        if (group_size < 2) throw InvalidGroupSize("group_size must be >= 2");
    }
};

}  // namespace pairrank
