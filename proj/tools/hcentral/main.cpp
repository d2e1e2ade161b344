#include "hcentral/cli.hpp"

int main(int argc, char** argv) { return hcentral::cli::run(argc, argv); }
