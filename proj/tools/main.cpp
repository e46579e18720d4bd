#include "cli.hpp"

int main(int argc, char** argv) { return rowconvex::cli::run(argc, argv); }
