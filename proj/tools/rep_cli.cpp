#include "rep/cli.hpp"

int main(int argc, char** argv) { return rep::cli::run(argc, argv); }
