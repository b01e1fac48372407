#include "curve_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mgc/errors.hpp"
#include "mgc/expr.hpp"
#include "mgc/spline.hpp"

namespace mgc::tools {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::shared_ptr<const Curve> curve_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("curve JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw Error(ErrorCode::InvalidInput, "curve JSON must be an object");

    const std::string param = doc.value("param", std::string("u"));
    std::string comp[4];
    const char* keys[4] = {"x1", "x2", "x3", "x4"};
    for (int i = 0; i < 4; ++i) {
        if (!doc.contains(keys[i]) || !doc[keys[i]].is_string())
            throw Error(ErrorCode::InvalidInput,
                        std::string("curve JSON: missing string field \"") + keys[i] + "\"");
        comp[i] = doc[keys[i]].get<std::string>();
    }
    if (!doc.contains("domain") || !doc["domain"].is_array() || doc["domain"].size() != 2)
        throw Error(ErrorCode::InvalidInput, "curve JSON: \"domain\" must be [lo,hi]");
    Interval dom{doc["domain"][0].get<double>(), doc["domain"][1].get<double>()};

    return std::make_shared<CurveSpec>(parse(comp[0], param), parse(comp[1], param),
                                       parse(comp[2], param), parse(comp[3], param), dom, param);
}

std::shared_ptr<const Curve> curve_from_json_file(const std::string& path) {
    return curve_from_json_text(slurp(path));
}

std::shared_ptr<const Curve> curve_from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open \"" + path + "\"");

    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorCode::InvalidInput, "empty CSV \"" + path + "\"");
    // Header must be u,x1,x2,x3,x4 (tolerating surrounding whitespace/CR).
    {
        std::string h = line;
        h.erase(std::remove_if(h.begin(), h.end(),
                               [](char c) { return c == ' ' || c == '\r' || c == '\t'; }),
                h.end());
        if (h != "u,x1,x2,x3,x4")
            throw Error(ErrorCode::InvalidInput,
                        "CSV header must be u,x1,x2,x3,x4 (got \"" + line + "\")");
    }

    std::vector<double> u;
    std::array<std::vector<double>, 4> comp;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        std::istringstream ls(line);
        std::string cell;
        double row[5];
        for (int i = 0; i < 5; ++i) {
            if (!std::getline(ls, cell, ','))
                throw Error(ErrorCode::InvalidInput,
                            "CSV line " + std::to_string(lineno) + ": expected 5 columns");
            try {
                row[i] = std::stod(cell);
            } catch (const std::exception&) {
                throw Error(ErrorCode::InvalidInput,
                            "CSV line " + std::to_string(lineno) + ": bad number \"" + cell + "\"");
            }
        }
        u.push_back(row[0]);
        for (int i = 0; i < 4; ++i) comp[i].push_back(row[i + 1]);
    }
    return std::make_shared<SplineCurve>(std::move(u), std::move(comp));
}

} // namespace mgc::tools
