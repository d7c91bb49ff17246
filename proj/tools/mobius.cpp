#include <iostream>

#include "mobius/workbench.hpp"

int main(int argc, char** argv) { return mobius::run_workbench(argc, argv, std::cout, std::cerr); }
