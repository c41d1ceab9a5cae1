#include "edgering/guards.hpp"

#include <cstdlib>
#include <string>

namespace edgering {

namespace {

void read_env_int(const char* name, int& slot) {
    if (const char* v = std::getenv(name)) {
        slot = std::stoi(v);
    }
}

void read_env_int64(const char* name, std::int64_t& slot) {
    if (const char* v = std::getenv(name)) {
        slot = std::stoll(v);
    }
}

}  // namespace

Guards Guards::from_environment() {
    Guards g;
    read_env_int("EDGERING_MAX_CONE_VERTICES", g.max_cone_vertices);
    read_env_int("EDGERING_MAX_SEARCH_EDGES", g.max_search_edges);
    read_env_int("EDGERING_MAX_DILATE", g.max_dilate);
    read_env_int64("EDGERING_MAX_LEVEL_POINTS", g.max_level_points);
    return g;
}

const Guards& default_guards() {
    static const Guards guards = Guards::from_environment();
    return guards;
}

}  // namespace edgering
