#include <iostream>

#include "seifert/cli.hpp"

int main(int argc, char** argv) {
  return seifert::cli::run(argc, argv, std::cout, std::cerr);
}
