#pragma once

#include <cstdint>
#include <vector>

#include "pairrank/fuzzy.hpp"
#include "pairrank/rng.hpp"
#include "pairrank/types.hpp"

namespace pairrank {

/// A difficulty level of the synthetic question bank. Correctness probability
/// ramps linearly from 0 toward p_correct_below as length approaches
/// min_sufficient_length, then plateaus at p_correct_at_sufficient. Extra
/// length beyond sufficiency is wasted, never harmful.
struct DifficultyLevel {
    int id = 0;
    long long min_sufficient_length = 0;
    double p_correct_at_sufficient = 0.0;
    double p_correct_below = 0.0;  // ramp cap just below sufficiency
    double quality_noise = 0.05;   // fuzzy mode: latent-quality jitter amplitude
};

struct EnvSpec {
    int num_questions = 0;
    std::vector<DifficultyLevel> difficulty_levels;
    std::vector<long long> length_bins;
    TaskMode mode = TaskMode::Verifiable;
    std::uint64_t seed = 0;

    void validate() const;
};

struct Question {
    int id = 0;
    int difficulty_index = 0;
};

/// One group member's rollout. latent_quality is meaningful in fuzzy mode
/// only; the simulated judge compares it.
struct RolloutOutcome {
    int question_id = 0;
    int bin_index = 0;
    ResponseSample sample;
    double latent_quality = 0.0;
};

/// Difficulties assigned round-robin, then shuffled by a seeded permutation.
/// Deterministic under spec.seed.
std::vector<Question> generate_question_bank(const EnvSpec& spec);

/// P(correct | response length) for one difficulty level. Non-decreasing in
/// length, constant beyond min_sufficient_length.
double correct_probability(const DifficultyLevel& level, long long length);

/// Latent answer quality in fuzzy mode: saturating in length up to
/// sufficiency, flat beyond it (before noise).
double base_quality(const DifficultyLevel& level, long long length);

/// Realizes one response for (question, length bin) at the given stream key.
/// Pure given the key; identical keys yield identical samples.
RolloutOutcome realize_response(const EnvSpec& spec, const Question& question, int bin_index,
                                const rng::StreamKey& key);

/// Higher latent quality wins; exact ties go to the lower sample id.
JudgedPair simulated_judge(const RolloutOutcome& a, const RolloutOutcome& b);

}  // namespace pairrank
