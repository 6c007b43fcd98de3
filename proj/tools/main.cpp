#include "sqw/cli.hpp"

int main(int argc, char** argv) { return sqw::cli_main(argc, argv); }
