#include "linecut/cli.hpp"

int main(int argc, char** argv) { return linecut::run_cli(argc, argv); }
