#include <asq2/cli.hpp>

int main(int argc, char** argv) {
  return asq2::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
