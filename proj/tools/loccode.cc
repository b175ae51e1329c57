#include <loccode/commands.hh>

#include <iostream>
#include <string>
#include <vector>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return loccode::run_cli(args, std::cout, std::cerr);
}
