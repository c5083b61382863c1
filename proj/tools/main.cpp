#include "mindecomp/cli.hpp"

int main(int argc, char** argv) { return mindecomp::cli::run(argc, argv); }
