#include "ergo/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "ergo/errors.hpp"

namespace ergo {

JsonValue JsonValue::object() {
    JsonValue v;
    v.kind_ = Kind::Object;
    return v;
}

JsonValue JsonValue::array() {
    JsonValue v;
    v.kind_ = Kind::Array;
    return v;
}

JsonValue JsonValue::boolean(bool b) {
    JsonValue v;
    v.kind_ = Kind::Bool;
    v.bool_ = b;
    return v;
}

JsonValue JsonValue::integer(long long x) {
    JsonValue v;
    v.kind_ = Kind::Int;
    v.int_ = x;
    return v;
}

JsonValue JsonValue::unsigned_integer(std::uint64_t x) {
    JsonValue v;
    v.kind_ = Kind::Uint;
    v.uint_ = x;
    return v;
}

JsonValue JsonValue::real(double x) {
    JsonValue v;
    v.kind_ = Kind::Real;
    v.real_ = x;
    return v;
}

JsonValue JsonValue::string(std::string s) {
    JsonValue v;
    v.kind_ = Kind::String;
    v.string_ = std::move(s);
    return v;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
    if (kind_ != Kind::Object) throw io_error("set() on a non-object JSON value");
    for (const auto& [k, ignored] : members_)
        if (k == key) throw io_error("duplicate JSON key: " + key);
    members_.emplace_back(key, std::move(v));
    return *this;
}

JsonValue& JsonValue::push(JsonValue v) {
    if (kind_ != Kind::Array) throw io_error("push() on a non-array JSON value");
    items_.push_back(std::move(v));
    return *this;
}

std::string format_double(double v) {
    if (!std::isfinite(v)) throw io_error("non-finite value in report");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.9g", v);
    return buf;
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void indent_to(std::string& out, int indent) { out.append(static_cast<std::size_t>(indent) * 2, ' '); }

}  // namespace

void JsonValue::render_to(std::string& out, int indent) const {
    switch (kind_) {
        case Kind::Null:
            out += "null";
            break;
        case Kind::Bool:
            out += bool_ ? "true" : "false";
            break;
        case Kind::Int:
            out += std::to_string(int_);
            break;
        case Kind::Uint:
            out += std::to_string(uint_);
            break;
        case Kind::Real:
            out += format_double(real_);
            break;
        case Kind::String:
            append_escaped(out, string_);
            break;
        case Kind::Array:
            if (items_.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < items_.size(); ++i) {
                indent_to(out, indent + 1);
                items_[i].render_to(out, indent + 1);
                if (i + 1 < items_.size()) out += ',';
                out += '\n';
            }
            indent_to(out, indent);
            out += ']';
            break;
        case Kind::Object:
            if (members_.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            for (std::size_t i = 0; i < members_.size(); ++i) {
                indent_to(out, indent + 1);
                append_escaped(out, members_[i].first);
                out += ": ";
                members_[i].second.render_to(out, indent + 1);
                if (i + 1 < members_.size()) out += ',';
                out += '\n';
            }
            indent_to(out, indent);
            out += '}';
            break;
    }
}

std::string JsonValue::render() const {
    std::string out;
    render_to(out, 0);
    out += '\n';
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw io_error("write failed for " + path);
}

}  // namespace ergo
