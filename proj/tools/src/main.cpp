#include "cli.hpp"

int main(int argc, char** argv) { return baker::cli::run(argc, argv); }
