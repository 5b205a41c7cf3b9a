#include "fermi/cli.hpp"

int main(int argc, char** argv) { return fermi::cli::run_cli(argc, argv); }
