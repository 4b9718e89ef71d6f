#include "symdyn/cli.hpp"

int main(int argc, char** argv) { return symdyn::cli::main_entry(argc, argv); }
