#include "rrk/cli/cli.hpp"

int main(int argc, char** argv) { return rrk::cli::run(argc, argv); }
