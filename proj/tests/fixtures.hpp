#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json_io.hpp"

namespace qch::fixtures {

inline std::string dir() {
    const char* env = std::getenv("QCH_FIXTURES");
    return env && *env ? env : "fixtures";
}

inline std::string read(const std::string& name) {
    std::string path = dir() + "/" + name + ".json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("fixture not found: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Arrangement load(const std::string& name) { return parse_arrangement(read(name)); }

}  // namespace qch::fixtures
