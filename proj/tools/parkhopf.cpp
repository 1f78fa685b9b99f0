#include <iostream>

#include <parkhopf/cli/run.hpp>

int main(int argc, char **argv)
{
    return parkhopf::cli::run(argc, argv, std::cout, std::cerr);
}
