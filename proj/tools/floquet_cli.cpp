#include "floquet/cli_app.hpp"

int main(int argc, char** argv) { return floquet::cli::run(argc, argv); }
