#include "ekr/cli.hpp"

int main(int argc, char** argv) {
    return ekr::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
