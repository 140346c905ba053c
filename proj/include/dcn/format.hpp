#pragma once

// Text forms of group elements, degrees and words.
//
//   element := "r(" int ")" | "sr(" int ")" | "1" | "s0" | "s1"
//   degree  := nat "," nat | "(" nat "," nat ")"
//
// Whitespace is ignored anywhere.  Printing always uses the r(k) / sr(k) form,
// and parse_element(to_string(g)) == g.

#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dihedral.hpp"

namespace dcn {

/// Malformed input.  `position` is the byte offset of the offending character
/// in the original text.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position)
    {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Well-formed input whose magnitude is outside the supported bound.
class range_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Largest |k| (and largest degree component) accepted from text.
inline constexpr std::uint64_t max_input_magnitude = std::uint64_t{1} << 31;

inline std::string to_string(const GroupElement& g)
{
    return (g.is_rotation() ? "r(" : "sr(") + std::to_string(g.k) + ")";
}

inline std::string to_string(const Degree& d)
{
    return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

inline std::string to_string(Generator g) { return g == Generator::S0 ? "s0" : "s1"; }

inline std::string to_string(const Word& w)
{
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(w[i]);
    }
    return out + "]";
}

/// `{r(2), r(-2)}`; the set is assumed to be in canonical order already.
inline std::string to_string(const ElementSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(s[i]);
    }
    return out + "}";
}

namespace detail {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end()
    {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    /// Accepts a keyword; whitespace between its letters is tolerated too.
    bool accept(std::string_view word)
    {
        const std::size_t saved = pos_;
        for (char c : word) {
            if (!accept(c)) {
                pos_ = saved;
                return false;
            }
        }
        return true;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    void expect_end()
    {
        if (!at_end())
            fail("unexpected trailing input");
    }

    std::uint64_t natural()
    {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a digit");
        std::uint64_t value = 0;
        bool too_big = false;
        while (true) {
            const char c = peek();
            if (!std::isdigit(static_cast<unsigned char>(c)))
                break;
            ++pos_;
            if (!too_big) {
                value = value * 10 + static_cast<std::uint64_t>(c - '0');
                too_big = value > max_input_magnitude;
            }
        }
        if (too_big)
            throw range_error("magnitude exceeds 2^31 in '" + std::string(text_) + "'");
        return value;
    }

    std::int64_t integer()
    {
        bool negative = false;
        if (accept('-'))
            negative = true;
        else
            accept('+');
        const auto magnitude = static_cast<std::int64_t>(natural());
        return negative ? -magnitude : magnitude;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw parse_error(what + " in '" + std::string(text_) + "'", pos_);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline GroupElement parse_element(std::string_view text)
{
    detail::Scanner in(text);
    GroupElement g;
    if (in.accept("sr")) {
        in.expect('(');
        g = sr(in.integer());
        in.expect(')');
    } else if (in.accept('r')) {
        in.expect('(');
        g = r(in.integer());
        in.expect(')');
    } else if (in.accept("s0")) {
        g = sr(0);
    } else if (in.accept("s1")) {
        g = sr(1);
    } else if (in.accept('1')) {
        g = GroupElement::identity();
    } else {
        in.fail("expected r(k), sr(k), 1, s0 or s1");
    }
    in.expect_end();
    return g;
}

inline Degree parse_degree(std::string_view text)
{
    detail::Scanner in(text);
    const bool parenthesised = in.accept('(');
    Degree d;
    d.a = in.natural();
    in.expect(',');
    d.b = in.natural();
    if (parenthesised)
        in.expect(')');
    in.expect_end();
    return d;
}

} // namespace dcn
