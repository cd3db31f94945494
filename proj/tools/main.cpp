#include "qcsurf/cli.hpp"

int main(int argc, char** argv) { return qcsurf::cli::run(argc, argv); }
