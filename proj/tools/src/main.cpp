#include <iostream>

#include "preorder_cli/cli.hpp"

int main(int argc, char** argv) {
  return preorder::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
