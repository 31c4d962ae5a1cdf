#include "advect/cli.hpp"

int main(int argc, char** argv) { return advect::cli_main(argc, argv); }
