// Copyright 2026 The distsim Authors. Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include <iostream>

#include "distsim/cli.hpp"

int main(int argc, char** argv) { return distsim::cli::run(argc, argv, std::cout, std::cerr); }
