#include "ncdb/speclang.hpp"

int main(int argc, char** argv) { return ncdb::cli_main(argc, argv); }
