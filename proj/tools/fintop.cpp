#include "fintop/cli.hpp"

int main(int argc, char** argv) { return fintop::run_cli(argc, argv); }
