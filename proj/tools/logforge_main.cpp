#include "logforge/cli.hpp"

int main(int argc, char** argv) { return logforge::cli_main(argc, argv); }
