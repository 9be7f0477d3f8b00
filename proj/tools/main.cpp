#include <iostream>

#include <ellgw/cli.hpp>

int main(int argc, char **argv)
{
    return ellgw::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
