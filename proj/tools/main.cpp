#include <iostream>
#include <string>
#include <vector>

#include "chatelet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chatelet::run_cli(args, std::cout, std::cerr);
}
