#include <masspart/cli.hpp>

int main(int argc, char** argv) { return masspart::run_cli(argc, argv); }
