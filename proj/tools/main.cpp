#include <iostream>

#include "evtper/cli.hpp"

int main(int argc, char** argv) {
  return evtper::run_cli(argc, argv, std::cout, std::cerr);
}
