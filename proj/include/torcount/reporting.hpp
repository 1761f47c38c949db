#pragma once

#include "torcount/archimedean.hpp"
#include "torcount/counting.hpp"
#include "torcount/predict.hpp"

#include <string>
#include <utility>
#include <vector>

namespace torcount {

enum class OutputFormat { JSON, CSV };

// Round to 12 significant digits; all reported reals go through this so output
// is reproducible byte for byte.
double sig12(double v);
std::string real_str(double v);

std::string count_report(const Setup& s, const Int& B, const CountResult& r,
                         OutputFormat f);
std::string constants_report(const Setup& s, const Prediction& p, OutputFormat f);
std::string compare_report(const Setup& s, const std::vector<CompareRow>& rows,
                           OutputFormat f);
// Each row carries its boundary label ("w" or "wz").
std::string fp_report(const std::vector<std::pair<std::string, LocalDensity>>& rows,
                      OutputFormat f);
std::string fiber_rows_report(const Setup& s, const Int& B,
                              const std::vector<FiberRow>& rows, OutputFormat f);

} // namespace torcount
