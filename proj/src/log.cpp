#include "citytour/log.hpp"

#include <iostream>

namespace citytour::log {

namespace {
Level g_level = Level::info;
}

Level level() noexcept { return g_level; }
void set_level(Level lv) noexcept { g_level = lv; }

void set_level_from_string(const std::string& name) noexcept {
  if (name == "quiet") g_level = Level::quiet;
  else if (name == "info") g_level = Level::info;
  else if (name == "debug") g_level = Level::debug;
}

void warn(const std::string& msg) {
  if (g_level >= Level::info) std::cerr << "warning: " << msg << "\n";
}

void info(const std::string& msg) {
  if (g_level >= Level::info) std::cerr << msg << "\n";
}

void debug(const std::string& msg) {
  if (g_level >= Level::debug) std::cerr << "debug: " << msg << "\n";
}

}  // namespace citytour::log
