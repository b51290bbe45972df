#include "thermobar/cli.hpp"

int main(int argc, char** argv) { return thermobar::cli::run(argc, argv); }
