#include <gtest/gtest.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include "test_support.hpp"

namespace {
std::uint64_t g_seed = 20240611;
}

std::uint64_t qplab::proptest::seed() { return g_seed; }

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--seed=", 0) == 0) {
            g_seed = std::stoull(arg.substr(7));
        } else if (arg == "--seed" && i + 1 < argc) {
            g_seed = std::stoull(argv[++i]);
        }
    }
    std::cout << "property seed: " << g_seed << "\n";
    return RUN_ALL_TESTS();
}
