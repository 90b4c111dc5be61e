#include "caloric/io_format.hpp"

#include <cstdio>

namespace caloric {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

JsonWriter& JsonWriter::field(const std::string& key, double v) {
    return field_raw(key, format_double(v));
}

JsonWriter& JsonWriter::field(const std::string& key, long long v) {
    return field_raw(key, std::to_string(v));
}

JsonWriter& JsonWriter::field(const std::string& key, std::size_t v) {
    return field_raw(key, std::to_string(v));
}

JsonWriter& JsonWriter::field(const std::string& key, bool v) {
    return field_raw(key, v ? "true" : "false");
}

JsonWriter& JsonWriter::field(const std::string& key, const std::string& v) {
    return field_raw(key, "\"" + escape(v) + "\"");
}

JsonWriter& JsonWriter::field(const std::string& key, const std::vector<double>& v) {
    std::string arr = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) arr += ',';
        arr += format_double(v[i]);
    }
    arr += ']';
    return field_raw(key, arr);
}

JsonWriter& JsonWriter::field_raw(const std::string& key, const std::string& json) {
    fields_.emplace_back(key, json);
    return *this;
}

std::string JsonWriter::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i) out += ',';
        out += "\n  \"" + escape(fields_[i].first) + "\": " + fields_[i].second;
    }
    out += "\n}\n";
    return out;
}

std::string JsonWriter::escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace caloric
