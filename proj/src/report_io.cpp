#include "halcbc/report_io.hpp"

#include <cmath>
#include <cstdio>

namespace halcbc::report {

std::string format_double(double value) {
    if (!std::isfinite(value)) return value > 0 ? "1e9999" : (value < 0 ? "-1e9999" : "null");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_escaped(std::ostream& out, std::string_view text) {
    out << '"';
    for (char c : text) {
        switch (c) {
            case '"': out << "\\\""; break;
            case '\\': out << "\\\\"; break;
            case '\n': out << "\\n"; break;
            case '\t': out << "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out << buf;
                } else {
                    out << c;
                }
        }
    }
    out << '"';
}

void JsonWriter::newline_indent() {
    out_ << '\n';
    for (std::size_t i = 0; i < stack_.size(); ++i) out_ << "  ";
}

void JsonWriter::before_value() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (stack_.empty()) return;
    if (stack_.back().first) out_ << ',';
    stack_.back().first = true;
    newline_indent();
}

JsonWriter& JsonWriter::begin_object() {
    before_value();
    out_ << '{';
    stack_.emplace_back(false, false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    const bool had_content = stack_.back().first;
    stack_.pop_back();
    if (had_content) newline_indent();
    out_ << '}';
    if (stack_.empty()) out_ << '\n';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    before_value();
    out_ << '[';
    stack_.emplace_back(false, true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    const bool had_content = stack_.back().first;
    stack_.pop_back();
    if (had_content) newline_indent();
    out_ << ']';
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
    if (stack_.back().first) out_ << ',';
    stack_.back().first = true;
    newline_indent();
    write_escaped(out_, name);
    out_ << ": ";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    before_value();
    out_ << format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
    before_value();
    out_ << v;
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    before_value();
    out_ << (v ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
    before_value();
    write_escaped(out_, v);
    return *this;
}

JsonWriter& JsonWriter::null_value() {
    before_value();
    out_ << "null";
    return *this;
}

} // namespace halcbc::report
