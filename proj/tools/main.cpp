#include "sumfree/cli.hpp"

int main(int argc, char** argv) { return sumfree::cli::run(argc, argv); }
