#include "commands.hpp"

int main(int argc, char** argv) { return hrange::cli::run_cli(argc, argv); }
