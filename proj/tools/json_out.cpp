#include "json_out.hpp"

#include <cmath>

namespace mgc::tools {

std::string Json::format_double(double v) {
    if (!std::isfinite(v)) return "null"; // errors are caught upstream; keep valid JSON
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

void Json::write_escaped(std::string& out, std::string_view s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"':  out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void Json::write(std::string& out) const {
    switch (kind_) {
        case Kind::Object: {
            out += '{';
            bool first = true;
            for (const auto& [k, v] : entries_) {
                if (!first) out += ',';
                first = false;
                write_escaped(out, k);
                out += ':';
                v.write(out);
            }
            out += '}';
            return;
        }
        case Kind::Array: {
            out += '[';
            bool first = true;
            for (const auto& [k, v] : entries_) {
                (void)k;
                if (!first) out += ',';
                first = false;
                v.write(out);
            }
            out += ']';
            return;
        }
        case Kind::String:
            write_escaped(out, scalar_);
            return;
        case Kind::Number:
        case Kind::Literal:
            out += scalar_;
            return;
    }
}

} // namespace mgc::tools
