#include "cli.hpp"

int main(int argc, char** argv) { return ucpoly::cli::run(argc, argv); }
