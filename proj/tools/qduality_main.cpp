#include "qduality/cli.hpp"

int main(int argc, char** argv) { return qduality::cli_main(argc, argv); }
