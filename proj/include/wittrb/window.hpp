#pragma once

#include <stdexcept>
#include <string>

namespace wittrb {

/// Closed integer interval [lo, hi] over which operator tables are defined.
/// Absence outside the window means "unknown", never "zero".
struct Window {
    int lo = 0;
    int hi = 0;

    bool contains(int m) const { return lo <= m && m <= hi; }
    int size() const { return hi - lo + 1; }
    Window shrunk(int margin) const { return {lo + margin, hi - margin}; }
    bool valid() const { return lo <= hi; }
    bool symmetric_about_zero() const { return lo == -hi; }

    bool operator==(const Window&) const = default;
    std::string str() const { return std::to_string(lo) + ":" + std::to_string(hi); }

    // Parses "LO:HI", e.g. "-8:8".
    static Window parse(const std::string& text);
};

struct OutsideWindow : std::runtime_error {
    int index;
    explicit OutsideWindow(int idx)
        : std::runtime_error("table index " + std::to_string(idx) + " outside window"),
          index(idx) {}
};

struct Inadmissible : std::runtime_error {
    explicit Inadmissible(const std::string& what)
        : std::runtime_error("inadmissible: " + what) {}
};

struct InvalidParameters : std::runtime_error {
    explicit InvalidParameters(const std::string& what) : std::runtime_error(what) {}
};

inline Window Window::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidParameters("window must be LO:HI, got '" + text + "'");
    Window w;
    try {
        w.lo = std::stoi(text.substr(0, colon));
        w.hi = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw InvalidParameters("window must be LO:HI, got '" + text + "'");
    }
    if (!w.valid()) throw InvalidParameters("window lo > hi: '" + text + "'");
    return w;
}

} // namespace wittrb
