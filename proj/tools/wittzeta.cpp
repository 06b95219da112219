#include <cstdio>
#include <string>
#include <vector>

#include "wz/report.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    wz::CliResult r = wz::run_command(args);
    std::fputs(r.human.c_str(), r.exit_code == 0 ? stdout : stderr);
    return r.exit_code;
}
