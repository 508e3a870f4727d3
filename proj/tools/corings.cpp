// Command-line entry point; all behaviour lives in corings/cli.hpp so the
// test suite can drive the tool in-process.

#include <iostream>
#include <string>
#include <vector>

#include <corings/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return corings::run_command(args, std::cout, std::cerr);
}
