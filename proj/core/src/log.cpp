#include "vibesift/log.hpp"

#include <atomic>
#include <iostream>

namespace vibesift {

namespace {
std::atomic<bool> g_quiet{false};
}

void set_quiet(bool quiet) { g_quiet.store(quiet); }

bool quiet() { return g_quiet.load(); }

void log_warning(std::string_view message) {
    if (!g_quiet.load()) {
        std::cerr << "warning: " << message << '\n';
    }
}

}  // namespace vibesift
