#include "ifd/cli.hpp"

int main(int argc, char **argv) { return ifd::cli_main(argc, argv); }
