#include "constangle/cli.hpp"

int main(int argc, char** argv) { return constangle::cli::run(argc, argv); }
