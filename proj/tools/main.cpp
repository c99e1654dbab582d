#include <iostream>

#include "cli.hpp"

int main(int argc, char ** argv)
{
    auto parsed = normform::cli::parse_args(argc, argv, std::cout, std::cerr);
    if (auto const * code = std::get_if<int>(&parsed))
        return *code;
    return normform::cli::run(std::get<normform::cli::RunConfig>(parsed), std::cout, std::cerr);
}
