#include "cli.hpp"

int main(int argc, char** argv) { return durrmeyer::cli::run(argc, argv); }
