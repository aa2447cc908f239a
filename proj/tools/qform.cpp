#include "qform/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qform::run(argc, argv, std::cout, std::cerr); }
