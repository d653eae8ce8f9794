#include "kk/report_json.hpp"

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace kk {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string JsonWriter::format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

void JsonWriter::comma() {
    if (!first_in_scope_.empty()) {
        if (!first_in_scope_.back()) out_ += ",";
        first_in_scope_.back() = false;
        out_ += "\n";
    }
}

void JsonWriter::indent() {
    for (int i = 0; i < depth_; ++i) out_ += "  ";
}

JsonWriter& JsonWriter::begin_object() {
    comma();
    indent();
    out_ += "{";
    first_in_scope_.push_back(true);
    ++depth_;
    return *this;
}

JsonWriter& JsonWriter::begin_object(const std::string& key) {
    comma();
    indent();
    out_ += "\"" + escape(key) + "\": {";
    first_in_scope_.push_back(true);
    ++depth_;
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    --depth_;
    if (!first_in_scope_.back()) out_ += "\n";
    if (!first_in_scope_.back()) indent();
    first_in_scope_.pop_back();
    out_ += "}";
    return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& key) {
    comma();
    indent();
    out_ += "\"" + escape(key) + "\": [";
    first_in_scope_.push_back(true);
    ++depth_;
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    --depth_;
    if (!first_in_scope_.back()) {
        out_ += "\n";
        indent();
    }
    first_in_scope_.pop_back();
    out_ += "]";
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const std::string& value) {
    comma();
    indent();
    out_ += "\"" + escape(key) + "\": \"" + escape(value) + "\"";
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const char* value) {
    return field(key, std::string(value));
}

JsonWriter& JsonWriter::field(const std::string& key, double value) {
    comma();
    indent();
    out_ += "\"" + escape(key) + "\": " + format_double(value);
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, int value) {
    comma();
    indent();
    out_ += "\"" + escape(key) + "\": " + std::to_string(value);
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, bool value) {
    comma();
    indent();
    out_ += "\"" + escape(key) + "\": " + (value ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::element(double value) {
    comma();
    indent();
    out_ += format_double(value);
    return *this;
}

JsonWriter& JsonWriter::element(const std::string& value) {
    comma();
    indent();
    out_ += "\"" + escape(value) + "\"";
    return *this;
}

void atomic_write_file(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp-" + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open for writing: " + tmp);
        f << content;
        if (!f.good()) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("atomic rename failed for: " + path);
    }
}

}  // namespace kk
