#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace halcbc::report {

inline constexpr const char* kVersion = "0.1.0";

// "%.17g" rendering; round-trips any double exactly.
std::string format_double(double value);

/**
 * Streaming JSON writer with insertion-ordered keys, two-space indentation,
 * and 17-significant-digit doubles. Output bytes depend only on the call
 * sequence, which keeps report files identical across reruns and thread
 * counts.
 */
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& out) : out_(out) {}

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view name);

    JsonWriter& value(double v);
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(std::size_t v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(bool v);
    JsonWriter& value(std::string_view v);
    JsonWriter& value(const char* v) { return value(std::string_view(v)); }
    JsonWriter& null_value();

    template <typename T>
    JsonWriter& field(std::string_view name, const T& v) {
        key(name);
        return value(v);
    }
    template <typename T>
    JsonWriter& array_field(std::string_view name, const std::vector<T>& values) {
        key(name);
        begin_array();
        for (const auto& v : values) value(v);
        return end_array();
    }

private:
    void before_value();
    void newline_indent();
    std::ostream& out_;
    // per-level: whether anything was emitted yet, and whether we are inside
    // an array (true) or object (false)
    std::vector<std::pair<bool, bool>> stack_;
    bool pending_key_ = false;
};

void write_escaped(std::ostream& out, std::string_view text);

} // namespace halcbc::report
