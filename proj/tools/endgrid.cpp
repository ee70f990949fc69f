#include "endgrid/cli.hpp"

int main(int argc, char** argv) { return endgrid::run_cli(argc, argv); }
