#include "nsimplex/report.hpp"

#include <cinttypes>
#include <cstdio>

namespace nsimplex {

std::string tool_version() {
#ifdef NSIMPLEX_VERSION
    return NSIMPLEX_VERSION;
#else
    return "dev";
#endif
}

std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

RunReport::RunReport(std::string command) {
    fields_.emplace_back("tool", "nsimplex " + tool_version());
    fields_.emplace_back("command", std::move(command));
}

void RunReport::add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
}

void RunReport::add(std::string key, long long value) {
    fields_.emplace_back(std::move(key), std::to_string(value));
}

void RunReport::add(std::string key, bool value) {
    fields_.emplace_back(std::move(key), value ? "true" : "false");
}

void RunReport::add_input_digest(const std::string& name, std::string_view content) {
    fields_.emplace_back("input." + name + ".digest", "fnv1a64:" + fnv1a64_hex(content));
}

void RunReport::add_timing(const std::string& label, double milliseconds) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", milliseconds);
    timings_.emplace_back("time." + label + "_ms", buf);
}

std::string RunReport::render() const {
    std::string out;
    for (const auto& [k, v] : fields_) out += k + "=" + v + "\n";
    for (const auto& [k, v] : timings_) out += k + "=" + v + "\n";
    return out;
}

} // namespace nsimplex
