#include "htype/cli/cli.hpp"

int main(int argc, char** argv) { return htype::cli::run(argc, argv); }
