#include <string>
#include <vector>

#include "heiskakeya/cli.hpp"

int main(int argc, char** argv) {
  return heiskakeya::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
