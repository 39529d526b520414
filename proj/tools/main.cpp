#include <iostream>

#include "tessarine/cli.hpp"

int main(int argc, char** argv) {
  return tess::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
