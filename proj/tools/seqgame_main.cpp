#include <iostream>

#include "seqgame/cli.hpp"

int main(int argc, char** argv) { return seqgame::dispatch(argc, argv, std::cout, std::cerr); }
