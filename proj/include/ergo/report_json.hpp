#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ergo {

// Minimal JSON document builder for report output. Object keys keep their
// insertion order and doubles render with exactly 9 significant digits, so
// a report serializes to the same bytes on every run.
class JsonValue {
public:
    JsonValue() : kind_(Kind::Null) {}

    static JsonValue object();
    static JsonValue array();
    static JsonValue boolean(bool b);
    static JsonValue integer(long long v);
    static JsonValue unsigned_integer(std::uint64_t v);
    static JsonValue real(double v);  // rejects NaN/Inf at render time
    static JsonValue string(std::string s);

    // Object insert; returns *this for chaining. Duplicate keys rejected.
    JsonValue& set(const std::string& key, JsonValue v);
    // Array append.
    JsonValue& push(JsonValue v);

    bool is_object() const { return kind_ == Kind::Object; }
    bool is_array() const { return kind_ == Kind::Array; }

    // Pretty rendering with two-space indent and a trailing newline.
    std::string render() const;

private:
    enum class Kind { Null, Bool, Int, Uint, Real, String, Array, Object };

    void render_to(std::string& out, int indent) const;

    Kind kind_;
    bool bool_ = false;
    long long int_ = 0;
    std::uint64_t uint_ = 0;
    double real_ = 0.0;
    std::string string_;
    std::vector<JsonValue> items_;
    std::vector<std::pair<std::string, JsonValue>> members_;
};

// "%#.9g" rendering used for every double in reports and CSVs.
std::string format_double(double v);

// Writes content atomically enough for our purposes; io_error with the
// path on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ergo
