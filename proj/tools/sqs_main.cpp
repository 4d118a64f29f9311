#include "sqs/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  return sqs::run_cli(argc, argv, std::cout, std::cerr);
}
