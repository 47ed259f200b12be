// Line/column-tracking cursor for the small fixed-layout text formats.
#ifndef NSIMPLEX_TEXT_PARSE_HPP
#define NSIMPLEX_TEXT_PARSE_HPP

#include <charconv>
#include <string>
#include <string_view>

#include "nsimplex/errors.hpp"

namespace nsimplex::detail {

class LineCursor {
public:
    explicit LineCursor(std::string_view text) : text_(text) {}

    bool next_line() {
        if (pos_ >= text_.size()) return false;
        std::size_t end = text_.find('\n', pos_);
        if (end == std::string_view::npos) {
            line_ = text_.substr(pos_);
            pos_ = text_.size();
        } else {
            line_ = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
        }
        ++line_no_;
        col_ = 1;
        return true;
    }

    int line_no() const { return line_no_; }
    int column() const { return col_; }
    std::string_view line() const { return line_; }
    bool at_line_end() const { return col_ > static_cast<int>(line_.size()); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " (line " + std::to_string(line_no_) + ", column " +
                             std::to_string(col_) + ")",
                         line_no_, col_);
    }

    void expect_line(std::string_view expected, const std::string& what) {
        if (!next_line()) {
            col_ = 1;
            ++line_no_;
            fail("missing " + what);
        }
        if (line_ != expected) {
            col_ = 1;
            while (col_ <= static_cast<int>(line_.size()) &&
                   col_ <= static_cast<int>(expected.size()) &&
                   line_[static_cast<std::size_t>(col_ - 1)] ==
                       expected[static_cast<std::size_t>(col_ - 1)])
                ++col_;
            fail("expected '" + std::string(expected) + "'");
        }
    }

    void skip_spaces() {
        while (!at_line_end() && line_[static_cast<std::size_t>(col_ - 1)] == ' ') ++col_;
    }

    long long read_int(const std::string& what) {
        skip_spaces();
        if (at_line_end()) fail("expected " + what);
        const char* begin = line_.data() + (col_ - 1);
        const char* end = line_.data() + line_.size();
        long long value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) fail("expected " + what);
        col_ += static_cast<int>(ptr - begin);
        return value;
    }

    void read_token(std::string_view token, const std::string& what) {
        skip_spaces();
        std::size_t i = static_cast<std::size_t>(col_ - 1);
        if (line_.size() - i < token.size() || line_.substr(i, token.size()) != token)
            fail("expected '" + std::string(token) + "' in " + what);
        col_ += static_cast<int>(token.size());
    }

    void expect_line_end() {
        skip_spaces();
        if (!at_line_end()) fail("unexpected trailing characters");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::string_view line_;
    int line_no_ = 0;
    int col_ = 1;
};

} // namespace nsimplex::detail

#endif
