#include "rcarlab/cli.hpp"

int main(int argc, char** argv) { return rcarlab::cli::run_main(argc, argv); }
