#include "dictatorlab/cli.hpp"

int main(int argc, char** argv) { return dictatorlab::cli_main(argc, argv); }
