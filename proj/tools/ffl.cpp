#include <iostream>

#include "ffl/cli.hpp"

int main(int argc, char** argv) {
  return ffl::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
