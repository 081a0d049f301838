#include "nanotube/cli.hpp"

int main(int argc, char** argv) { return nanotube::cli_main(argc, argv); }
