#include <iostream>
#include <string>
#include <vector>

#include "sylvester/cli.hpp"

int main(int argc, char** argv) {
  return sylvester::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
