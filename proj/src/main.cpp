/**
 * @file main.cpp
 * @brief Process entry point for the nxa command-line tool.
 */
#include "nxa/cli.hpp"

int main(int argc, char** argv) { return nxa::run_cli(argc, argv); }
