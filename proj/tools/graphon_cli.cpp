#include "graphon/cli.hpp"

int main(int argc, char** argv) { return graphon::cli_main(argc, argv); }
