#include <iostream>
#include <string>
#include <vector>

#include "stepmp/cli.hpp"

int main(int argc, char** argv) {
  return stepmp::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
