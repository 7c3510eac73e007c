#pragma once

#include <vector>

#include "pairrank/types.hpp"

namespace pairrank {

/// Side-by-side comparison of the closed-form rank rewards against brute-force
/// pairwise enumeration for a canonical group (n samples, m incorrect, beta=1,
/// distinct correct lengths).
struct OracleRow {
    int sample = 0;
    bool correct = false;
    int rank = -1;  // longest-first rank among correct samples; -1 if incorrect
    double brute_force = 0.0;
    double closed_form = 0.0;
};

struct OracleTable {
    std::vector<OracleRow> rows;
    int mismatches = 0;  // rows where the two routes disagree
};

OracleTable closed_form_vs_brute_force(int n, int m, double alpha);

}  // namespace pairrank
