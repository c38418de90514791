#pragma once

#include <string>
#include <vector>

namespace durrmeyer::cli {

// Parsed experiment description shared by the file-emitting subcommands.
struct experiment_config {
    std::vector<std::string> presets;
    std::vector<int> n_values;
    std::string function_id;
    int grid_resolution = 201;
    std::string out_dir;
    bool svg = false;
    std::string a0_expr;
    std::string a1_expr;
};

// Exit codes: 0 ok, 2 invalid configuration, 3 numerical assertion failed,
// 4 I/O failure.
int run(int argc, char** argv);

}
