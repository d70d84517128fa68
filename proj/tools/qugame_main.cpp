#include "qugame/cli/commands.hpp"

int main(int argc, char** argv) { return qugame::cli::main_entry(argc, argv); }
