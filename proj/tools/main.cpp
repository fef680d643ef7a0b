#include "hcat/cli.hpp"

int main(int argc, char** argv) { return hcat::cli::run(argc, argv); }
