#pragma once

#include <string>

#include "wreathkit/bundle.hpp"
#include "wreathkit/report.hpp"

namespace wreathkit {

/// Bundle file format (UTF-8 JSON, versioned): rational entries are "num/den"
/// strings, prime-field entries integers in [0, p).
std::string bundle_to_json(const StructureBundle& b);
StructureBundle bundle_from_json(const std::string& text);

StructureBundle load_bundle(const std::string& path);
void save_bundle(const StructureBundle& b, const std::string& path);

std::string report_to_json(const CheckReport& rep);
std::string report_to_text(const CheckReport& rep);

}  // namespace wreathkit
