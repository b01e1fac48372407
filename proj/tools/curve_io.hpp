#pragma once

#include <memory>
#include <string>

#include "mgc/curve.hpp"

namespace mgc::tools {

/// Load a curve definition document:
///   {"param":"u","x1":"sinh(u)","x2":"cosh(u)",
///    "x3":"sqrt(2)*cos(u)","x4":"sqrt(2)*sin(u)","domain":[0.0,2.0]}
std::shared_ptr<const Curve> curve_from_json_file(const std::string& path);
std::shared_ptr<const Curve> curve_from_json_text(const std::string& text);

/// Load a sampled curve: CSV with header u,x1,x2,x3,x4 ('.' decimal
/// separator). Components are fitted with natural cubic splines; jets
/// beyond order 3 are reduced accuracy, which callers surface in report
/// metadata.
std::shared_ptr<const Curve> curve_from_csv_file(const std::string& path);

} // namespace mgc::tools
