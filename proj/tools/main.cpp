#include "excount/cli.hpp"

int main(int argc, char** argv) { return excount::cli::run(argc, argv); }
