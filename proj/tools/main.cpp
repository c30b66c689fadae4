#include <iostream>
#include <string>
#include <vector>

#include "weilheight/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return weilheight::cli::run(std::move(args), std::cout, std::cerr);
}
