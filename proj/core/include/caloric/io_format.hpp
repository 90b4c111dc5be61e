#pragma once

#include <string>
#include <vector>

namespace caloric {

/// Deterministic round-trip formatting (%.17g); identical inputs give
/// byte-identical output across runs.
std::string format_double(double v);

/// Minimal JSON emitter for flat report objects; keys keep insertion order.
class JsonWriter {
public:
    JsonWriter& field(const std::string& key, double v);
    JsonWriter& field(const std::string& key, long long v);
    JsonWriter& field(const std::string& key, std::size_t v);
    JsonWriter& field(const std::string& key, bool v);
    JsonWriter& field(const std::string& key, const std::string& v);
    JsonWriter& field_raw(const std::string& key, const std::string& json);
    JsonWriter& field(const std::string& key, const std::vector<double>& v);

    std::string str() const;

    static std::string escape(const std::string& s);

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace caloric
