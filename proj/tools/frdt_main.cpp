#include <iostream>
#include <string>
#include <vector>

#include "frdt/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return frdt::app::main_entry(args, std::cout, std::cerr);
}
