#include <eigenkit/cli.hpp>

int main(int argc, char** argv) { return eigenkit::cli::run(argc, argv); }
