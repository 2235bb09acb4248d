#include "parastab/cli.hpp"

int main(int argc, char **argv) { return parastab::cli_main(argc, argv); }
