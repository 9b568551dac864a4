#ifndef PFAFFELL_REPORT_HPP
#define PFAFFELL_REPORT_HPP

#include <cstdio>
#include <string>
#include <vector>

namespace pfaffell {

inline constexpr const char* artifact_version = "0.1.0";
inline constexpr int report_schema_version = 1;

/// Minimal JSON emitter with a byte-stable output contract: keys are written
/// in call order, floating values with 17 significant digits, no whitespace
/// variance. Reports produced from equal configs are byte-identical.
class JsonWriter {
public:
    std::string str() const { return out_; }

    void begin_object() { open("{"); }
    void end_object() { close("}"); }
    void begin_array() { open("["); }
    void end_array() { close("]"); }

    void key(const std::string& name) {
        comma();
        append_string(name);
        out_ += ':';
        just_keyed_ = true;
    }

    void value(const std::string& s) {
        comma();
        append_string(s);
    }

    void value(const char* s) { value(std::string(s)); }

    void value(double x) {
        comma();
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        out_ += buf;
    }

    void value(int x) { value(static_cast<long long>(x)); }

    void value(long long x) {
        comma();
        out_ += std::to_string(x);
    }

    void value(unsigned long long x) {
        comma();
        out_ += std::to_string(x);
    }

    void value(bool b) {
        comma();
        out_ += b ? "true" : "false";
    }

    void null() {
        comma();
        out_ += "null";
    }

    /// Complex number as a two-element [re, im] array.
    void value_complex(double re, double im) {
        begin_array();
        value(re);
        value(im);
        end_array();
    }

    void kv(const std::string& k, const std::string& v) { key(k); value(v); }
    void kv(const std::string& k, const char* v) { key(k); value(v); }
    void kv(const std::string& k, double v) { key(k); value(v); }
    void kv(const std::string& k, int v) { key(k); value(v); }
    void kv(const std::string& k, long long v) { key(k); value(v); }
    void kv(const std::string& k, unsigned long long v) { key(k); value(v); }
    void kv(const std::string& k, bool v) { key(k); value(v); }

private:
    void open(const char* tok) {
        comma();
        out_ += tok;
        needs_comma_ = false;
    }

    void close(const char* tok) {
        out_ += tok;
        needs_comma_ = true;
        just_keyed_ = false;
    }

    void comma() {
        if (just_keyed_) {
            just_keyed_ = false;
            needs_comma_ = true;
            return;
        }
        if (needs_comma_) out_ += ',';
        needs_comma_ = true;
    }

    void append_string(const std::string& s) {
        out_ += '"';
        for (char ch : s) {
            switch (ch) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                case '\t': out_ += "\\t"; break;
                case '\r': out_ += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(ch) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                        out_ += buf;
                    } else {
                        out_ += ch;
                    }
            }
        }
        out_ += '"';
    }

    std::string out_;
    bool needs_comma_ = false;
    bool just_keyed_ = true;  // top-level value needs no comma
};

} // namespace pfaffell

#endif // PFAFFELL_REPORT_HPP
