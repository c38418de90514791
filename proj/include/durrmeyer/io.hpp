#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace durrmeyer::io {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest representation that round-trips a double (printf %.17g trimmed
// by the g conversion itself).
std::string format_double(double v);

// Columns must share one length matching the header width.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

// Returns columns; stores the header row when the pointer is non-null.
std::vector<std::vector<double>> read_csv(const std::string& path,
                                          std::vector<std::string>* header = nullptr);

struct series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

// One polyline per series, shared axes with tick labels and a legend.
// Every coordinate must be finite.
void write_svg(const std::string& path, const std::string& title,
               const std::vector<series>& plots);

}
