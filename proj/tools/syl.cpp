#include <iostream>

#include "syllogism/cli.hpp"

int main(int argc, char** argv) {
  return syl::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
