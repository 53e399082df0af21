#include "hycone/cli.hpp"

int main(int argc, char** argv) {
  return hycone::cli::main(argc, argv);
}
