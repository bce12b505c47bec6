#include <iostream>

#include "magbot/cli.hpp"

int main(int argc, char** argv) {
  return magbot::run_cli(argc, argv, std::cout, std::cerr);
}
