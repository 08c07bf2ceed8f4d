// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "linmimo/cli/commands.hpp"

int main(int argc, char** argv) {
    return linmimo::cli::run_cli(argc, argv, std::cout, std::cerr);
}
