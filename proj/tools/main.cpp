#include "motivic/cli.hpp"

int main(int argc, char** argv) {
    return motivic::run(argc, argv);
}
