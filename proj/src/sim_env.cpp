#include "pairrank/sim_env.hpp"

#include <algorithm>

namespace pairrank {

void EnvSpec::validate() const {
    if (num_questions <= 0) throw InvalidSpec("num_questions must be positive");
    if (difficulty_levels.empty()) throw InvalidSpec("at least one difficulty level required");
    if (length_bins.size() < 2) throw InvalidSpec("at least two length bins required");
    for (size_t i = 1; i < length_bins.size(); ++i) {
        if (length_bins[i] <= length_bins[i - 1])
            throw InvalidSpec("length_bins must be strictly increasing");
    }
    if (length_bins.front() <= 0) throw InvalidSpec("length bins must be positive");
    for (const auto& level : difficulty_levels) {
        if (level.p_correct_at_sufficient < 0.0 || level.p_correct_at_sufficient > 1.0 ||
            level.p_correct_below < 0.0 || level.p_correct_below > 1.0)
            throw InvalidSpec("probabilities must lie in [0, 1]");
        if (level.p_correct_below > level.p_correct_at_sufficient)
            throw InvalidSpec("p_correct_below must not exceed p_correct_at_sufficient");
        if (level.min_sufficient_length < length_bins.front() ||
            level.min_sufficient_length > length_bins.back())
            throw InvalidSpec("min_sufficient_length outside the bin range");
        if (level.quality_noise < 0.0) throw InvalidSpec("quality_noise must be non-negative");
    }
    if (mode == TaskMode::FuzzyPointwise)
        throw InvalidSpec("the environment simulates Verifiable or FuzzyPairwise tasks");
}

std::vector<Question> generate_question_bank(const EnvSpec& spec) {
    spec.validate();
    const int n = spec.num_questions;
    const int levels = static_cast<int>(spec.difficulty_levels.size());

    std::vector<Question> bank(n);
    for (int i = 0; i < n; ++i) bank[i] = Question{i, i % levels};

    // Seeded Fisher-Yates over difficulty assignments; question ids stay 0..n-1.
    for (int i = n - 1; i > 0; --i) {
        rng::StreamKey key{spec.seed, 0, static_cast<std::uint64_t>(i), 0,
                           rng::Purpose::BankShuffle, 0};
        const int j = static_cast<int>(rng::uniform01(key) * (i + 1));
        std::swap(bank[i].difficulty_index, bank[j].difficulty_index);
    }
    for (int i = 0; i < n; ++i) bank[i].id = i;
    return bank;
}

double correct_probability(const DifficultyLevel& level, long long length) {
    if (length >= level.min_sufficient_length) return level.p_correct_at_sufficient;
    const double frac = static_cast<double>(length) /
                        static_cast<double>(level.min_sufficient_length);
    return level.p_correct_below * frac;
}

double base_quality(const DifficultyLevel& level, long long length) {
    const double frac = static_cast<double>(length) /
                        static_cast<double>(level.min_sufficient_length);
    return std::min(1.0, frac);
}

RolloutOutcome realize_response(const EnvSpec& spec, const Question& question, int bin_index,
                                const rng::StreamKey& key) {
    if (bin_index < 0 || bin_index >= static_cast<int>(spec.length_bins.size()))
        throw InvalidSpec("bin index out of range");
    const auto& level = spec.difficulty_levels[static_cast<size_t>(question.difficulty_index)];
    const long long length = spec.length_bins[static_cast<size_t>(bin_index)];

    RolloutOutcome out;
    out.question_id = question.id;
    out.bin_index = bin_index;
    out.sample.id = static_cast<int>(key.member);
    out.sample.length = length;

    if (spec.mode == TaskMode::Verifiable) {
        rng::StreamKey draw = key;
        draw.purpose = rng::Purpose::CorrectnessDraw;
        out.sample.outcome = Correctness{rng::bernoulli(draw, correct_probability(level, length))};
    } else {
        rng::StreamKey draw = key;
        draw.purpose = rng::Purpose::QualityNoise;
        out.latent_quality =
            base_quality(level, length) + rng::symmetric_uniform(draw, level.quality_noise);
        // Rank gets assigned once the whole group is judged.
        out.sample.outcome = QualityRank{0};
    }
    return out;
}

JudgedPair simulated_judge(const RolloutOutcome& a, const RolloutOutcome& b) {
    if (a.latent_quality > b.latent_quality) return {a.sample.id, b.sample.id};
    if (b.latent_quality > a.latent_quality) return {b.sample.id, a.sample.id};
    return a.sample.id < b.sample.id ? JudgedPair{a.sample.id, b.sample.id}
                                     : JudgedPair{b.sample.id, a.sample.id};
}

}  // namespace pairrank
