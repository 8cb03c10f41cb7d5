#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const auto res = sgcm::cli::run_main(argc, argv);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
