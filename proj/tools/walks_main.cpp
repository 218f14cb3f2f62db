#include <iostream>

#include "walks/cli.hpp"

int main(int argc, char** argv) {
  return walks::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
