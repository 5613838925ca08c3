#pragma once

#include <fstream>
#include <string>

#include "citest/profile.hpp"

namespace citest::testing {

inline CitationProfile load_fixture(const std::string& stem) {
    const std::string path = std::string(CITEST_FIXTURE_DIR) + "/" + stem + ".csv";
    std::ifstream in(path);
    if (!in) throw Error("missing fixture " + path);
    return load_profile(in, Format::csv);
}

}  // namespace citest::testing
