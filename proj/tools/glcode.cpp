#include <iostream>

#include "glcode/cli.hpp"

int main(int argc, char** argv) {
  return glcode::cli::run(argc, argv, std::cout, std::cerr);
}
