#include "pint/cli.hpp"

int main(int argc, char** argv) { return pint::run_cli(argc, argv); }
