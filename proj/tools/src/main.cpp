#include <iostream>

#include "cqfb_cli/app.hpp"

int main(int argc, char** argv) {
  return cqfb::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
