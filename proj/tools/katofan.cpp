#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "katofan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = katofan::cli::execute(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
