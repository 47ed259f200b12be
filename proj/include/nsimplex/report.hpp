#ifndef NSIMPLEX_REPORT_HPP
#define NSIMPLEX_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nsimplex {

std::string tool_version();

/// FNV-1a 64-bit content hash, rendered as 16 hex digits.
std::string fnv1a64_hex(std::string_view data);

/// Line-oriented key=value run report with a stable field order. Timing lines
/// are grouped at the end under "time." keys and are the only
/// non-deterministic part of the output.
class RunReport {
public:
    explicit RunReport(std::string command);

    void add(std::string key, std::string value);
    void add(std::string key, long long value);
    void add(std::string key, bool value);
    void add_input_digest(const std::string& name, std::string_view content);
    void add_timing(const std::string& label, double milliseconds);

    std::string render() const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
    std::vector<std::pair<std::string, std::string>> timings_;
};

} // namespace nsimplex

#endif
