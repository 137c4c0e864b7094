#pragma once

#include <array>
#include <optional>
#include <string>

namespace cn {

// The 15 line orbits of PG(5,q) under the PGL(3,q) action, q odd.
enum class LineOrbit {
    o5, o6, o8_1, o8_2, o9, o10, o12,
    o13_1, o13_2, o14_1, o14_2, o15_1, o15_2, o16, o17,
};
inline constexpr int kNumLineOrbits = 15;

// The 16 labels for plane orbits meeting the Veronese surface; at any given q
// exactly 15 arise (S14 iff q != 0 mod 3, S14p iff q = 0 mod 3).
enum class PlaneOrbit {
    S1, S2, S3, S4, S5, S6, S7, S8, S9, S10,
    S11, S12, S13, S14, S15, S14p,
};
inline constexpr int kNumPlaneLabels = 16;

constexpr std::array<LineOrbit, kNumLineOrbits> all_line_orbits() {
    return {LineOrbit::o5, LineOrbit::o6, LineOrbit::o8_1, LineOrbit::o8_2,
            LineOrbit::o9, LineOrbit::o10, LineOrbit::o12, LineOrbit::o13_1,
            LineOrbit::o13_2, LineOrbit::o14_1, LineOrbit::o14_2, LineOrbit::o15_1,
            LineOrbit::o15_2, LineOrbit::o16, LineOrbit::o17};
}

constexpr std::array<PlaneOrbit, kNumPlaneLabels> all_plane_labels() {
    return {PlaneOrbit::S1, PlaneOrbit::S2, PlaneOrbit::S3, PlaneOrbit::S4,
            PlaneOrbit::S5, PlaneOrbit::S6, PlaneOrbit::S7, PlaneOrbit::S8,
            PlaneOrbit::S9, PlaneOrbit::S10, PlaneOrbit::S11, PlaneOrbit::S12,
            PlaneOrbit::S13, PlaneOrbit::S14, PlaneOrbit::S15, PlaneOrbit::S14p};
}

inline bool plane_label_valid(PlaneOrbit s, int q) {
    if (s == PlaneOrbit::S14) return q % 3 != 0;
    if (s == PlaneOrbit::S14p) return q % 3 == 0;
    return true;
}

// ASCII label, stable across output formats: "o8,1", "S14'".
std::string to_string(LineOrbit o);
std::string to_string(PlaneOrbit s);
// Pretty label for terminal output: "Σ14'".
std::string pretty(PlaneOrbit s);
// Accepts "o8,1" / "o8_1", "S3" / "Sigma3" / "Σ3", "S14'" / "S14p".
std::optional<LineOrbit> parse_line_orbit(const std::string& s);
std::optional<PlaneOrbit> parse_plane_orbit(const std::string& s);

}  // namespace cn
