#include "cli.hpp"

int main(int argc, char** argv) { return multlab::cli::run_main(argc, argv); }
