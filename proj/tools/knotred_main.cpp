#include "knotred/cli.hpp"

int main(int argc, char** argv) { return knotred::cli::run(argc, argv); }
