#include "cli.hpp"

int main(int argc, char** argv) { return algconn::cli::dispatch(argc, argv); }
