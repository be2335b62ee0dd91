#include "dikin/cli.hpp"

int main(int argc, char** argv) { return dikin::cli::run(argc, argv); }
