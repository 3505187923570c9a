#include "weakiasi/cli.hpp"

int main(int argc, char** argv) { return weakiasi::cli::run(argc, argv); }
