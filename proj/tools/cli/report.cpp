#include "report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace pathmetric::cli {

Json Report::to_json() const {
    Json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["results"] = results;
    j["diagnostics"] = diagnostics;
    return j;
}

std::string sha256_digest(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    std::string out = "sha256:";
    char hex[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(hex, sizeof hex, "%02x", md[i]);
        out += hex;
    }
    return out;
}

std::string render_json(const Report& r) { return r.to_json().dump(2) + "\n"; }

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool flat_array(const Json& j) {
    if (!j.is_array()) {
        return false;
    }
    for (const auto& e : j) {
        if (!is_scalar(e)) {
            return false;
        }
    }
    return true;
}

std::string inline_array(const Json& j) {
    std::string s = "[";
    bool first = true;
    for (const auto& e : j) {
        if (!first) {
            s += ", ";
        }
        first = false;
        s += scalar(e);
    }
    return s + "]";
}

void emit(std::ostringstream& os, const Json& j, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_scalar(value)) {
                os << pad << key << ": " << scalar(value) << '\n';
            } else if (flat_array(value)) {
                os << pad << key << ": " << inline_array(value) << '\n';
            } else {
                os << pad << key << ":\n";
                emit(os, value, depth + 1);
            }
        }
        return;
    }
    for (const auto& e : j) {
        if (is_scalar(e)) {
            os << pad << "- " << scalar(e) << '\n';
        } else if (flat_array(e)) {
            os << pad << "- " << inline_array(e) << '\n';
        } else {
            os << pad << "-\n";
            emit(os, e, depth + 1);
        }
    }
}

}  // namespace

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "command: " << r.command << '\n';
    os << "input: " << r.input_digest << '\n';
    emit(os, r.results, 0);
    for (const auto& d : r.diagnostics) {
        os << "note: " << d << '\n';
    }
    return os.str();
}

}  // namespace pathmetric::cli
