#include <iostream>

#include "psw/report.hpp"

int main(int argc, char** argv) { return psw::run_cli(argc, argv, std::cout, std::cerr); }
