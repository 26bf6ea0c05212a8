#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <variant>

#include "comfykit/error.hpp"

namespace comfykit {

/// Scalar widget value carried by a node input. Floats must be finite;
/// text round-trips exactly (newlines and quotes included).
class Literal {
public:
    enum class Kind { integer, real, boolean, text };

    Literal() : value_(std::int64_t{0}) {}

    static Literal of_int(std::int64_t v) { return Literal(v); }
    static Literal of_real(double v) {
        if (!std::isfinite(v)) throw Error(errc::unsupported_literal, "non-finite float literal");
        return Literal(v);
    }
    static Literal of_bool(bool v) { return Literal(v); }
    static Literal of_text(std::string v) { return Literal(std::move(v)); }

    Kind kind() const { return static_cast<Kind>(value_.index()); }
    bool is_int() const { return kind() == Kind::integer; }
    bool is_real() const { return kind() == Kind::real; }
    bool is_bool() const { return kind() == Kind::boolean; }
    bool is_text() const { return kind() == Kind::text; }

    std::int64_t as_int() const { return std::get<std::int64_t>(value_); }
    double as_real() const { return std::get<double>(value_); }
    bool as_bool() const { return std::get<bool>(value_); }
    const std::string& as_text() const { return std::get<std::string>(value_); }

    bool operator==(const Literal& other) const = default;

    const char* kind_name() const {
        switch (kind()) {
            case Kind::integer: return "integer";
            case Kind::real: return "float";
            case Kind::boolean: return "boolean";
            case Kind::text: return "text";
        }
        return "unknown";
    }

private:
    explicit Literal(std::int64_t v) : value_(v) {}
    explicit Literal(double v) : value_(v) {}
    explicit Literal(bool v) : value_(v) {}
    explicit Literal(std::string v) : value_(std::move(v)) {}

    std::variant<std::int64_t, double, bool, std::string> value_;
};

/// Shortest decimal form that parses back to the same double, always
/// carrying a '.' or exponent so it stays a float token.
inline std::string format_real(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, end);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('E') == std::string::npos && s.find("inf") == std::string::npos &&
        s.find("nan") == std::string::npos) {
        s += ".0";
    }
    return s;
}

}  // namespace comfykit
