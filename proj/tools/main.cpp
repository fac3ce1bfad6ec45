#include <iostream>

#include "mcent/cli.hpp"

int main(int argc, char** argv)
{
  return mcent::run_cli(argc, argv, std::cout, std::cerr);
}
