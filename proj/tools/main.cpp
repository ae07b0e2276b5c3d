#include "gridrig/cli.hpp"

int main(int argc, char** argv) { return gridrig::cli::run(argc, argv); }
