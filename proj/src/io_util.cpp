#include "fpcutoff/io_util.hpp"

#include <cmath>
#include <cstdio>

namespace fpcutoff {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string json_number(double value) {
    if (std::isfinite(value)) return format_double(value);
    return json_string(format_double(value));
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char ch : s) {
        switch (ch) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\t':
                out += "\\t";
                break;
            case '\r':
                out += "\\r";
                break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string json_string(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string json_bool(bool value) { return value ? "true" : "false"; }

}  // namespace fpcutoff
