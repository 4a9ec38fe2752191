#include <relmag/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    return relmag::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
