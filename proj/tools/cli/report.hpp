#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace pathmetric::cli {

using Json = nlohmann::json;

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kQueryError = 3,
    kCapExceeded = 4,
    kInternalError = 5,
};

struct Report {
    std::string command;
    std::string input_digest;
    Json results = Json::object();
    std::vector<std::string> diagnostics;

    Json to_json() const;
};

/// "sha256:<hex>" of the given bytes.
std::string sha256_digest(std::string_view bytes);

/// Sorted keys, two-space indent, trailing newline.
std::string render_json(const Report& r);

/// Indented key/value listing of the same tree.
std::string render_text(const Report& r);

}  // namespace pathmetric::cli
