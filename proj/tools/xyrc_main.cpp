#include <iostream>
#include <string>
#include <vector>

#include "xyrc/cli.hpp"

int main(int argc, char** argv) {
  return xyrc::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
