#pragma once

#include <vector>

namespace durrmeyer::analysis {

// Strictly increasing abscissae in [0,1]; never empty.
struct grid {
    std::vector<double> points;

    // m >= 2 equispaced points including both endpoints.
    static grid uniform(int m);
};

}
