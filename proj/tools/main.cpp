#include "gridbench/cli.hpp"

int main(int argc, char** argv) { return gridbench::cli_main(argc, argv); }
