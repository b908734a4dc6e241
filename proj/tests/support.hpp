#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nsurf/enumerate.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(NSURF_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline nsurf::Triangulation load_fixture(const std::string& name) {
    return nsurf::Triangulation::parse(read_file(fixture_path(name)));
}

// Orientable fixtures, smallest first.
inline const std::vector<std::string>& orientable_fixtures() {
    static const std::vector<std::string> names = {
        "t1_a.tri", "t1_b.tri", "t2_double.tri", "t2_a.tri", "t2_b.tri", "t3_a.tri",
    };
    return names;
}

inline const std::vector<std::string>& all_fixtures() {
    static const std::vector<std::string> names = {
        "t1_a.tri", "t1_b.tri",         "t2_double.tri",        "t2_a.tri",
        "t2_b.tri", "t3_a.tri",         "nonorientable_t2.tri",
    };
    return names;
}

inline const std::vector<std::string>& small_fixtures() {  // t <= 2
    static const std::vector<std::string> names = {
        "t1_a.tri", "t1_b.tri", "t2_double.tri", "t2_a.tri", "t2_b.tri",
    };
    return names;
}

}  // namespace testsupport
