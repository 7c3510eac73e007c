#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pairrank/types.hpp"

namespace pairrank {

/// Which member of an (a, b) pair is the positive one for a matched scenario.
enum class PositiveMember { First, Second };

/// A pairwise comparison scenario: a membership predicate over an unordered
/// sample pair plus the (gamma_plus, gamma_minus) reward assigned to its
/// positive/negative members. For the stock rule sets gamma_plus + gamma_minus
/// is always 0, which makes the pair matrix antisymmetric by construction.
struct ScenarioRule {
    std::string id;
    double gamma_plus = 0.0;
    double gamma_minus = 0.0;
    std::function<std::optional<PositiveMember>(const ResponseSample&, const ResponseSample&)>
        match;
};

/// N x N matrix with entries[i][k] = reward of sample i when compared with k.
/// Diagonal fixed at 0 (self-comparisons excluded).
class PairMatrix {
public:
    explicit PairMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double at(int i, int k) const { return entries_[static_cast<size_t>(i) * n_ + k]; }
    double& at(int i, int k) { return entries_[static_cast<size_t>(i) * n_ + k]; }

private:
    int n_;
    std::vector<double> entries_;
};

/// Per-sample aggregated rewards, totals[i] = sum over k != i of entries[i][k].
struct GroupRewards {
    std::vector<double> totals;
};

/// Classifies every unordered pair of samples against the rule set and fills
/// both directed entries from the matched scenario's reward pair. Exactly one
/// rule must match each pair; zero or multiple matches signal a malformed
/// rule set.
PairMatrix build_pair_matrix(const std::vector<ResponseSample>& samples,
                             const std::vector<ScenarioRule>& rules);

/// Row sums of the pair matrix. When all rules are zero-sum the totals sum
/// to 0.
GroupRewards aggregate_rewards(const PairMatrix& matrix);

}  // namespace pairrank
