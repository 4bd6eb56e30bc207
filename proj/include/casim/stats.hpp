#pragma once

#include <vector>

namespace casim::stats {

// Fractional (average) ranks; ties share the mean of their rank block.
std::vector<double> average_ranks(const std::vector<double>& values);

// Spearman rank correlation with average ranks for ties. Returns 0 for
// inputs shorter than 2 or with zero variance.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

double median(std::vector<double> values);
double stddev(const std::vector<double>& values);

}  // namespace casim::stats
