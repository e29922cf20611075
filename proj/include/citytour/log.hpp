#ifndef CITYTOUR_LOG_HPP
#define CITYTOUR_LOG_HPP

#include <string>

namespace citytour::log {

enum class Level { quiet = 0, info = 1, debug = 2 };

Level level() noexcept;
void set_level(Level lv) noexcept;

// Accepts "quiet", "info", "debug"; unknown strings leave the level unchanged.
void set_level_from_string(const std::string& name) noexcept;

void warn(const std::string& msg);
void info(const std::string& msg);
void debug(const std::string& msg);

}  // namespace citytour::log

#endif  // CITYTOUR_LOG_HPP
