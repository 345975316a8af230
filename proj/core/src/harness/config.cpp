#include "dilog/harness/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace dilog {

void RunConfig::validate() const {
    if (digits < kMinDigits) throw ConfigError("digits must be at least " + std::to_string(kMinDigits));
    if (max_terms < 1) throw ConfigError("max-terms must be at least 1");
    if (format != "json" && format != "text") throw ConfigError("format must be json or text, got '" + format + "'");
}

int default_digits() {
    const char* env = std::getenv("DILOG_DIGITS");
    if (env == nullptr || *env == '\0') return kDefaultDigits;
    const std::string_view text(env);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < kMinDigits) {
        throw ConfigError("DILOG_DIGITS must be an integer >= " + std::to_string(kMinDigits) + ", got '" +
                          std::string(text) + "'");
    }
    return value;
}

}  // namespace dilog
