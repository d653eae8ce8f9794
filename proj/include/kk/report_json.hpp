#pragma once

#include <string>
#include <vector>

namespace kk {

/// Minimal JSON emitter with deterministic output: insertion-ordered keys,
/// floats always printed as %.11e (12 significant digits), LF only.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array(const std::string& key);
    JsonWriter& begin_object(const std::string& key);
    JsonWriter& end_array();
    JsonWriter& field(const std::string& key, const std::string& value);
    JsonWriter& field(const std::string& key, const char* value);
    JsonWriter& field(const std::string& key, double value);
    JsonWriter& field(const std::string& key, int value);
    JsonWriter& field(const std::string& key, bool value);
    JsonWriter& element(double value);
    JsonWriter& element(const std::string& value);

    std::string str() const { return out_; }

    static std::string format_double(double v);

private:
    void comma();
    void indent();
    std::string out_;
    std::vector<bool> first_in_scope_;
    int depth_ = 0;
};

/// Writes content to path atomically (temp file + rename).
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace kk
