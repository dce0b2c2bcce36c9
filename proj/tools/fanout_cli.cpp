#include "fanout/cli.hpp"

int main(int argc, char** argv) { return fanout::cli::run(argc, argv); }
