#pragma once

#include <string>
#include <vector>

namespace parma::cli {

/// Polyline of y against its index.
std::string svg_line_plot(const std::vector<double>& y, const std::string& title);

/// Stems at lags 1..n with a dashed +/- band.
std::string svg_stem_plot(const std::vector<double>& y, double band, const std::string& title);

}  // namespace parma::cli
