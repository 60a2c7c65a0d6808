#include "cli.hpp"

int main(int argc, char** argv) { return alcove::cli::main_entry(argc, argv, std::cout, std::cerr); }
