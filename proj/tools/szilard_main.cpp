#include "szilard/cli.hpp"

int main(int argc, char** argv) { return szilard::cli::main_entry(argc, argv); }
