#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mgc::tools {

/// Deterministic JSON builder: fields keep insertion order and doubles are
/// rendered with 17 significant digits, so identical runs emit identical
/// bytes.
class Json {
public:
    static Json object() { return Json(Kind::Object); }
    static Json array() { return Json(Kind::Array); }
    static Json num(double v) { return Json(Kind::Number, format_double(v)); }
    static Json integer(long long v) { return Json(Kind::Number, std::to_string(v)); }
    static Json str(std::string_view v) { return Json(Kind::String, std::string(v)); }
    static Json boolean(bool v) { return Json(Kind::Literal, v ? "true" : "false"); }
    static Json null() { return Json(Kind::Literal, "null"); }

    Json& set(std::string_view key, Json v) {
        entries_.emplace_back(std::string(key), std::move(v));
        return *this;
    }
    Json& push(Json v) {
        entries_.emplace_back(std::string(), std::move(v));
        return *this;
    }

    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

    static std::string format_double(double v);

private:
    enum class Kind { Object, Array, Number, String, Literal };

    explicit Json(Kind kind, std::string scalar = {}) : kind_(kind), scalar_(std::move(scalar)) {}

    void write(std::string& out) const;
    static void write_escaped(std::string& out, std::string_view s);

    Kind kind_;
    std::string scalar_;
    std::vector<std::pair<std::string, Json>> entries_;
};

} // namespace mgc::tools
