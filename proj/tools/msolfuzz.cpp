#include "msol/cli.hpp"

int main(int argc, char** argv) { return msol::cli_main(argc, argv); }
